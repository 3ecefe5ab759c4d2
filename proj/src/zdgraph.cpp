#include "zdg/zdgraph.hpp"

#include <numeric>
#include <string>

namespace zdg {

ZdGraph::ZdGraph(std::uint64_t n, std::uint64_t oracle_cap)
    : ZdGraph(Modulus(n), oracle_cap) {}

ZdGraph::ZdGraph(const Modulus& modulus, std::uint64_t oracle_cap)
    : mod_(modulus),
      oracle_cap_(oracle_cap),
      vertex_count_(modulus.value() - 1 - modulus.totient()) {}

bool ZdGraph::is_vertex(std::uint64_t a) const {
    return a >= 1 && a < n() && std::gcd(a, n()) > 1;
}

void ZdGraph::require_vertex(std::uint64_t a) const {
    if (!is_vertex(a)) {
        throw domain_error(std::to_string(a) + " is not a vertex of the zero-divisor graph mod " +
                           std::to_string(n()));
    }
}

void ZdGraph::require_oracle_range() const {
    if (!within_oracle_cap()) {
        throw resource_limit_error("n = " + std::to_string(n()) +
                                   " exceeds the oracle cap of " + std::to_string(oracle_cap_));
    }
}

std::vector<std::uint64_t> ZdGraph::vertices() const {
    require_oracle_range();
    std::vector<std::uint64_t> out;
    out.reserve(vertex_count_);
    for (std::uint64_t a = 2; a < n(); ++a) {
        if (std::gcd(a, n()) > 1) out.push_back(a);
    }
    return out;
}

std::vector<std::uint64_t> ZdGraph::neighbors(std::uint64_t a) const {
    require_vertex(a);
    const std::uint64_t d = std::gcd(a, n());
    const std::uint64_t step = n() / d;
    std::vector<std::uint64_t> out;
    out.reserve(d - 1);
    for (std::uint64_t k = 1; k < d; ++k) {
        const std::uint64_t b = k * step;
        if (b != a) out.push_back(b);
    }
    return out;
}

std::uint64_t ZdGraph::degree(std::uint64_t a) const {
    require_vertex(a);
    const std::uint64_t d = std::gcd(a, n());
    return d - 1 - (mulmod(a, a, n()) == 0 ? 1 : 0);
}

bool ZdGraph::are_adjacent(std::uint64_t a, std::uint64_t b) const {
    require_vertex(a);
    require_vertex(b);
    return a != b && mulmod(a, b, n()) == 0;
}

std::vector<Edge> ZdGraph::edges() const {
    require_oracle_range();
    std::vector<Edge> out;
    for (std::uint64_t a = 2; a < n(); ++a) {
        if (std::gcd(a, n()) == 1) continue;
        for (std::uint64_t b : neighbors(a)) {
            if (b > a) out.push_back({a, b});
        }
    }
    return out;  // already lexicographic: a ascending, neighbors ascending
}

} // namespace zdg
