#pragma once

#include <cstdint>
#include <vector>

#include "zdg/zdgraph.hpp"

// Closed-form answers computed from the factorization of n alone, valid far
// beyond the oracle cap. Each predicate is cross-validated against
// zdg::oracle by the verify harness; the two engines never share results.
namespace zdg::theorems {

// Bridge characterization for an existing edge {a, b}: after swapping so
// the conditions can apply, gcd(a, n) = 2, 2b = n, and gcd(b, n) >= 3.
// Throws domain_error when (a, b) is not an edge.
bool is_cut_edge(const Modulus& m, std::uint64_t a, std::uint64_t b);

// Same predicate without the gcd(b, n) >= 3 clause. On actual edges the two
// forms are equivalent (for n >= 6 the hub n/2 automatically has
// gcd >= 3; n = 4 has no qualifying edge); the equivalence is asserted
// wholesale by the acceptance suite.
bool is_cut_edge_abstract_form(const Modulus& m, std::uint64_t a, std::uint64_t b);

// All bridges: {(a, n/2) : gcd(a, n) = 2, a != n/2} when n is even with
// gcd(n/2, n) >= 3, empty otherwise (odd n has none). Sorted by (lo, hi).
// Enumerates O(n) candidates, so the set form is for moderate n; use
// is_cut_edge for pointwise questions about huge moduli.
std::vector<Edge> cut_edges(const Modulus& m);

// Center as the union of the nonzero annihilator classes ann(p) \ {0} over
// the primes p | n: all nonzero multiples of n/p for some prime p. The
// classes are pairwise disjoint (lcm of n/p and n/q is n), so the size is
// sum(p - 1). Known to disagree with the BFS center for two documented
// families (see README); the verify harness measures exactly that.
std::vector<std::uint64_t> center(const Modulus& m);
std::uint64_t center_size(const Modulus& m);
bool is_central(const Modulus& m, std::uint64_t a);

// gcd(a, n) - 1, less one more when a^2 = 0 (mod n). Requires a vertex.
std::uint64_t degree(const Modulus& m, std::uint64_t a);

// Distance between distinct prime divisors p, q of n with p*q < n: always 3
// (p and q share no neighbor; p -- n/p -- n/q -- q is geodesic). Throws
// domain_error when the eligibility conditions fail.
int prime_distance(const Modulus& m, std::uint64_t p, std::uint64_t q);

// Diameter by cases on the factorization. Covered: n prime (empty graph),
// n = p^2 (complete on p - 1 vertices: 0 for p = 2, else 1), and n with two
// distinct primes p < q and n > p*q (diameter 3). Everything else (p^k with
// k >= 3, and n = p*q exactly) reports NotCovered.
struct Diameter {
    enum class Kind { Value, EmptyGraph, NotCovered };

    Kind kind = Kind::NotCovered;
    int value = 0;

    friend bool operator==(const Diameter&, const Diameter&) = default;
};

Diameter diameter(const Modulus& m);

} // namespace zdg::theorems
