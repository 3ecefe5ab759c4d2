#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "zdg/arith.hpp"

namespace zdg {

// Undirected edge stored with lo < hi.
struct Edge {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// The zero-divisor graph of Z_n: vertices are the residues a in [1, n-1]
// with gcd(a, n) > 1, and a -- b is an edge iff a != b and a*b = 0 (mod n).
//
// Pointwise queries (is_vertex, neighbors, degree, are_adjacent) run on the
// gcd/multiples structure and work for any modulus. Whole-graph
// materialization (vertices, edges) is capped by oracle_cap.
class ZdGraph {
public:
    static constexpr std::uint64_t kDefaultOracleCap = 50'000;

    explicit ZdGraph(std::uint64_t n, std::uint64_t oracle_cap = kDefaultOracleCap);
    explicit ZdGraph(const Modulus& modulus, std::uint64_t oracle_cap = kDefaultOracleCap);

    const Modulus& modulus() const { return mod_; }
    std::uint64_t n() const { return mod_.value(); }
    std::uint64_t oracle_cap() const { return oracle_cap_; }
    bool within_oracle_cap() const { return n() <= oracle_cap_; }

    // (n - 1) - totient(n); zero exactly when n is prime.
    std::uint64_t vertex_count() const { return vertex_count_; }

    bool is_vertex(std::uint64_t a) const;

    // Ascending. Requires n <= oracle_cap.
    std::vector<std::uint64_t> vertices() const;

    // Ascending: the nonzero multiples of n / gcd(a, n), minus a itself.
    // a is its own annihilator multiple exactly when a^2 = 0 (mod n).
    std::vector<std::uint64_t> neighbors(std::uint64_t a) const;

    // gcd(a, n) - 1, less one more when a^2 = 0 (mod n) (no loops).
    std::uint64_t degree(std::uint64_t a) const;

    bool are_adjacent(std::uint64_t a, std::uint64_t b) const;

    // Lexicographic by (lo, hi). Requires n <= oracle_cap.
    std::vector<Edge> edges() const;

    void require_vertex(std::uint64_t a) const;  // throws domain_error
    void require_oracle_range() const;           // throws resource_limit_error

private:
    Modulus mod_;
    std::uint64_t oracle_cap_;
    std::uint64_t vertex_count_;
};

} // namespace zdg
