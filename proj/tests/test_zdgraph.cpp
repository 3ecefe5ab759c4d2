#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "zdg/zdgraph.hpp"

namespace {

// Neighbor set recomputed from the defining relation a*x = 0 (mod n).
std::vector<std::uint64_t> scan_neighbors(std::uint64_t n, std::uint64_t a) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 1; x < n; ++x) {
        if (x != a && a * x % n == 0 && std::gcd(x, n) > 1) out.push_back(x);
    }
    return out;
}

} // namespace

TEST_CASE("vertex counts") {
    CHECK(zdg::ZdGraph(12).vertex_count() == 7);
    CHECK(zdg::ZdGraph(7).vertex_count() == 0);
    CHECK(zdg::ZdGraph(4).vertex_count() == 1);
    CHECK(zdg::ZdGraph(2).vertex_count() == 0);
    CHECK_THROWS_AS(zdg::ZdGraph(1), zdg::domain_error);
    CHECK_THROWS_AS(zdg::ZdGraph(0), zdg::domain_error);
}

TEST_CASE("vertex membership") {
    const zdg::ZdGraph g(12);
    CHECK(g.is_vertex(6));
    CHECK(g.is_vertex(2));
    CHECK(g.is_vertex(10));
    CHECK_FALSE(g.is_vertex(5));
    CHECK_FALSE(g.is_vertex(1));
    CHECK_FALSE(g.is_vertex(0));
    CHECK_FALSE(g.is_vertex(12));
    CHECK_FALSE(g.is_vertex(13));
}

TEST_CASE("vertices list") {
    using V = std::vector<std::uint64_t>;
    CHECK(zdg::ZdGraph(12).vertices() == V{2, 3, 4, 6, 8, 9, 10});
    CHECK(zdg::ZdGraph(7).vertices() == V{});
    CHECK(zdg::ZdGraph(4).vertices() == V{2});
}

TEST_CASE("vertex count equals the list length for every n up to 2000") {
    for (std::uint64_t n = 2; n <= 2000; ++n) {
        const zdg::ZdGraph g(n);
        if (g.vertices().size() != g.vertex_count()) FAIL("count mismatch at n=" << n);
    }
}

TEST_CASE("neighbors frozen values") {
    using V = std::vector<std::uint64_t>;
    CHECK(zdg::ZdGraph(12).neighbors(8) == V{3, 6, 9});
    CHECK(zdg::ZdGraph(12).neighbors(2) == V{6});
    CHECK(zdg::ZdGraph(8).neighbors(4) == V{2, 6});  // 4 excluded: 4*4 = 0 (mod 8)
    CHECK(zdg::ZdGraph(12).neighbors(6) == V{2, 4, 8, 10});
    CHECK(zdg::ZdGraph(4).neighbors(2) == V{});
    CHECK_THROWS_AS(zdg::ZdGraph(12).neighbors(5), zdg::domain_error);
    CHECK_THROWS_AS(zdg::ZdGraph(12).neighbors(0), zdg::domain_error);
}

TEST_CASE("neighbors equal the defining-relation scan for every n up to 400") {
    for (std::uint64_t n = 2; n <= 400; ++n) {
        const zdg::ZdGraph g(n);
        for (std::uint64_t a : g.vertices()) {
            if (g.neighbors(a) != scan_neighbors(n, a)) {
                FAIL("neighbor mismatch at n=" << n << " a=" << a);
            }
        }
    }
}

TEST_CASE("degree matches the neighbor list and the gcd formula for every n up to 1500") {
    for (std::uint64_t n = 2; n <= 1500; ++n) {
        const zdg::ZdGraph g(n);
        for (std::uint64_t a : g.vertices()) {
            const std::uint64_t deg = g.degree(a);
            if (deg != g.neighbors(a).size()) FAIL("degree mismatch at n=" << n << " a=" << a);
            const std::uint64_t d = std::gcd(a, n);
            const std::uint64_t expected = a * a % n == 0 ? d - 2 : d - 1;
            if (deg != expected) FAIL("gcd formula mismatch at n=" << n << " a=" << a);
        }
    }
}

TEST_CASE("degree frozen values") {
    CHECK(zdg::ZdGraph(12).degree(8) == 3);
    CHECK(zdg::ZdGraph(8).degree(4) == 2);   // gcd is 4; the loop at 4 is excluded
    CHECK(zdg::ZdGraph(4).degree(2) == 0);
    CHECK(zdg::ZdGraph(9).degree(3) == 1);
    CHECK_THROWS_AS(zdg::ZdGraph(12).degree(7), zdg::domain_error);
}

TEST_CASE("adjacency") {
    const zdg::ZdGraph g(12);
    CHECK(g.are_adjacent(4, 9));
    CHECK(g.are_adjacent(9, 4));
    CHECK(g.are_adjacent(2, 6));
    CHECK_FALSE(g.are_adjacent(2, 4));
    CHECK_FALSE(g.are_adjacent(6, 6));  // no loops
    CHECK_THROWS_AS(g.are_adjacent(5, 6), zdg::domain_error);
    CHECK_THROWS_AS(g.are_adjacent(6, 12), zdg::domain_error);
}

TEST_CASE("neighbor lists are symmetric and mirror-closed for every n up to 1000") {
    for (std::uint64_t n = 2; n <= 1000; ++n) {
        const zdg::ZdGraph g(n);
        const auto verts = g.vertices();
        std::vector<std::vector<std::uint64_t>> nbrs(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i) nbrs[i] = g.neighbors(verts[i]);
        auto index_of = [&](std::uint64_t v) {
            return std::lower_bound(verts.begin(), verts.end(), v) - verts.begin();
        };
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (!std::is_sorted(nbrs[i].begin(), nbrs[i].end())) {
                FAIL("neighbors not ascending at n=" << n);
            }
            for (std::uint64_t b : nbrs[i]) {
                // Symmetry: a appears in the neighbor list of b.
                const auto j = index_of(b);
                if (!std::binary_search(nbrs[j].begin(), nbrs[j].end(), verts[i])) {
                    FAIL("asymmetric adjacency at n=" << n << " a=" << verts[i] << " b=" << b);
                }
            }
            // Mirror: n - a is a vertex of the same degree.
            const std::uint64_t mirror = n - verts[i];
            if (!g.is_vertex(mirror)) FAIL("mirror not a vertex at n=" << n);
            if (g.degree(mirror) != g.degree(verts[i])) {
                FAIL("mirror degree differs at n=" << n << " a=" << verts[i]);
            }
        }
    }
}

TEST_CASE("edges frozen values") {
    using E = std::vector<zdg::Edge>;
    CHECK(zdg::ZdGraph(8).edges() == E{{2, 4}, {4, 6}});
    CHECK(zdg::ZdGraph(6).edges() == E{{2, 3}, {3, 4}});
    CHECK(zdg::ZdGraph(7).edges() == E{});
    CHECK(zdg::ZdGraph(4).edges() == E{});
    CHECK(zdg::ZdGraph(12).edges() ==
          E{{2, 6}, {3, 4}, {3, 8}, {4, 6}, {4, 9}, {6, 8}, {6, 10}, {8, 9}});
}

TEST_CASE("edge list is lexicographic and handshake-consistent for every n up to 1000") {
    for (std::uint64_t n = 2; n <= 1000; ++n) {
        const zdg::ZdGraph g(n);
        const auto edge_list = g.edges();
        if (!std::is_sorted(edge_list.begin(), edge_list.end())) {
            FAIL("edges not sorted at n=" << n);
        }
        std::uint64_t degree_sum = 0;
        for (std::uint64_t a : g.vertices()) degree_sum += g.degree(a);
        if (degree_sum % 2 != 0) FAIL("odd degree sum at n=" << n);
        if (edge_list.size() != degree_sum / 2) FAIL("handshake fails at n=" << n);
        for (const auto& e : edge_list) {
            if (e.lo >= e.hi) FAIL("unnormalized edge at n=" << n);
            if (!g.are_adjacent(e.lo, e.hi)) FAIL("non-edge listed at n=" << n);
        }
    }
}

TEST_CASE("oracle cap guards whole-graph materialization only") {
    const zdg::ZdGraph g(100, 50);
    CHECK_THROWS_AS(g.vertices(), zdg::resource_limit_error);
    CHECK_THROWS_AS(g.edges(), zdg::resource_limit_error);
    CHECK(g.neighbors(98) == std::vector<std::uint64_t>{50});  // pointwise still works
    CHECK(g.degree(98) == 1);
    CHECK(g.are_adjacent(98, 50));
}
