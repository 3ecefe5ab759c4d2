#include "zdg/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace zdg::theorems {

namespace {

bool is_vertex(const Modulus& m, std::uint64_t a) {
    return a >= 1 && a < m.value() && std::gcd(a, m.value()) > 1;
}

void require_edge(const Modulus& m, std::uint64_t a, std::uint64_t b) {
    if (!is_vertex(m, a) || !is_vertex(m, b) || a == b ||
        mulmod(a, b, m.value()) != 0) {
        throw domain_error("(" + std::to_string(a) + ", " + std::to_string(b) +
                           ") is not an edge of the zero-divisor graph mod " +
                           std::to_string(m.value()));
    }
}

} // namespace

bool is_cut_edge(const Modulus& m, std::uint64_t a, std::uint64_t b) {
    require_edge(m, a, b);
    const std::uint64_t n = m.value();
    auto matches = [n](std::uint64_t x, std::uint64_t y) {
        return std::gcd(x, n) == 2 && 2 * y == n && std::gcd(y, n) >= 3;
    };
    return matches(a, b) || matches(b, a);
}

bool is_cut_edge_abstract_form(const Modulus& m, std::uint64_t a, std::uint64_t b) {
    require_edge(m, a, b);
    const std::uint64_t n = m.value();
    auto matches = [n](std::uint64_t x, std::uint64_t y) {
        return std::gcd(x, n) == 2 && 2 * y == n;
    };
    return matches(a, b) || matches(b, a);
}

std::vector<Edge> cut_edges(const Modulus& m) {
    const std::uint64_t n = m.value();
    if (n % 2 != 0) return {};
    const std::uint64_t hub = n / 2;
    if (std::gcd(hub, n) < 3) return {};  // n = 4: hub is 2, no partner exists
    std::vector<Edge> out;
    for (std::uint64_t a = 2; a < n; a += 2) {
        if (a != hub && std::gcd(a, n) == 2) {
            out.push_back({std::min(a, hub), std::max(a, hub)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> center(const Modulus& m) {
    if (m.is_prime()) return {};
    std::vector<std::uint64_t> out;
    for (const auto& pp : m.factors()) {
        const std::uint64_t step = m.value() / pp.prime;
        for (std::uint64_t k = 1; k < pp.prime; ++k) out.push_back(k * step);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t center_size(const Modulus& m) {
    if (m.is_prime()) return 0;
    std::uint64_t size = 0;  // the ann(p) \ {0} classes are pairwise disjoint
    for (const auto& pp : m.factors()) size += pp.prime - 1;
    return size;
}

bool is_central(const Modulus& m, std::uint64_t a) {
    if (m.is_prime() || a == 0 || a >= m.value()) return false;
    for (const auto& pp : m.factors()) {
        if (a % (m.value() / pp.prime) == 0) return true;
    }
    return false;
}

std::uint64_t degree(const Modulus& m, std::uint64_t a) {
    if (!is_vertex(m, a)) {
        throw domain_error(std::to_string(a) + " is not a vertex of the zero-divisor graph mod " +
                           std::to_string(m.value()));
    }
    const std::uint64_t d = std::gcd(a, m.value());
    return d - 1 - (mulmod(a, a, m.value()) == 0 ? 1 : 0);
}

int prime_distance(const Modulus& m, std::uint64_t p, std::uint64_t q) {
    const std::uint64_t n = m.value();
    if (p == q || !zdg::is_prime(p) || !zdg::is_prime(q) || n % p != 0 || n % q != 0) {
        throw domain_error("prime_distance requires distinct prime divisors of n");
    }
    if (n / q <= p) {  // p*q >= n, exact because q | n
        throw domain_error("prime_distance requires p*q < n");
    }
    return 3;
}

Diameter diameter(const Modulus& m) {
    const auto& factors = m.factors();
    if (m.is_prime()) return {Diameter::Kind::EmptyGraph, 0};
    if (factors.size() == 1 && factors[0].exponent == 2) {
        // Complete graph on p - 1 vertices.
        return {Diameter::Kind::Value, factors[0].prime == 2 ? 0 : 1};
    }
    if (factors.size() >= 2) {
        const std::uint64_t p = factors[0].prime;
        const std::uint64_t q = factors[1].prime;
        if (m.value() / q > p) return {Diameter::Kind::Value, 3};  // n > p*q
    }
    return {Diameter::Kind::NotCovered, 0};
}

} // namespace zdg::theorems
