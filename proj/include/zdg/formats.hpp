#pragma once

#include <span>
#include <string>

#include "zdg/verify.hpp"
#include "zdg/zdgraph.hpp"

// Text and serialization helpers. Every function returns a deterministic
// string: sets are ascending, JSON keys keep insertion order.
namespace zdg::io {

// "{2,3,4}" / "{}"
std::string format_vertex_set(std::span<const std::uint64_t> vertices);

// "{(2,4),(4,6)}" / "{}"
std::string format_edge_set(std::span<const Edge> edges);

// "2^2 * 3"
std::string format_factorization(const Factorization& factors);

// Graphviz: isolated vertices as bare statements, then one "lo -- hi;" per
// edge, both ascending. Requires n <= oracle_cap.
std::string to_dot(const ZdGraph& g);

// Compact single object: {"n":6,"vertices":[2,3,4],"edges":[[2,3],[3,4]]}
std::string to_json(const ZdGraph& g);

// Header "lo,hi", one edge per line.
std::string to_csv(const ZdGraph& g);

// Compact report object:
// {"range":[min,max],"checks":[{"check":...,"agree":...,"disagree":...,
//  "skipped":...,"discrepancies":[{"n":...,"theorem":...,"oracle":...}]}]}
std::string report_json(std::uint64_t n_min, std::uint64_t n_max,
                        std::span<const verify::Report> reports);

} // namespace zdg::io
