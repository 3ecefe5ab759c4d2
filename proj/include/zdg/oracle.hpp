#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "zdg/zdgraph.hpp"

// Brute-force graph algorithms over a materialized ZdGraph. Everything here
// is an independent witness for the closed-form engine in zdg::theorems:
// no result below may shortcut through a theorem predicate. All functions
// require n <= oracle_cap and throw resource_limit_error otherwise.
namespace zdg::oracle {

struct EccentricityRecord {
    std::uint64_t vertex = 0;
    int eccentricity = 0;

    friend bool operator==(const EccentricityRecord&, const EccentricityRecord&) = default;
};

// BFS distances from a to every reachable vertex (a itself at distance 0).
std::map<std::uint64_t, int> distances_from(const ZdGraph& g, std::uint64_t a);

// Connected graphs here have eccentricity in {0, 1, 2, 3}, so the
// computation ladders: 0 for a singleton, 1 iff a is adjacent to everything,
// 2 iff the closed neighborhood of N(a) covers the graph, else 3. The unit
// suite pins this ladder against plain BFS for every n <= 1000.
int eccentricity(const ZdGraph& g, std::uint64_t a);

// One record per vertex, ascending by vertex.
std::vector<EccentricityRecord> eccentricities(const ZdGraph& g);

// Vertices of minimum eccentricity, ascending. Empty graph -> empty set.
std::vector<std::uint64_t> center(const ZdGraph& g);

// Max eccentricity; nullopt for the empty graph (n prime).
std::optional<int> diameter(const ZdGraph& g);

// Vacuously true for the empty and singleton graphs.
bool is_connected(const ZdGraph& g);

// All bridges (edges whose removal disconnects their endpoints), found with
// an iterative lowlink DFS, sorted by (lo, hi).
std::vector<Edge> bridges(const ZdGraph& g);

// Neighbor set recomputed by scanning all residues for a*x = 0 (mod n),
// bypassing the multiples-of-n/gcd formula. Exists to cross-check
// ZdGraph::neighbors.
std::vector<std::uint64_t> neighbors_by_scan(const ZdGraph& g, std::uint64_t a);

} // namespace zdg::oracle
