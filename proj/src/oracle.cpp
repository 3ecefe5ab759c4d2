#include "zdg/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>

namespace zdg::oracle {

namespace {

// Adjacency lists over compact indices 0..V-1 for the whole graph.
struct DenseView {
    std::vector<std::uint64_t> verts;           // ascending residues
    std::vector<std::int32_t> index_of;         // residue -> compact index, -1 if none
    std::vector<std::vector<std::int32_t>> adj; // ascending within each list
};

DenseView materialize(const ZdGraph& g) {
    g.require_oracle_range();
    DenseView view;
    view.verts = g.vertices();
    view.index_of.assign(g.n(), -1);
    for (std::size_t i = 0; i < view.verts.size(); ++i) {
        view.index_of[view.verts[i]] = static_cast<std::int32_t>(i);
    }
    view.adj.resize(view.verts.size());
    for (std::size_t i = 0; i < view.verts.size(); ++i) {
        const auto nbrs = g.neighbors(view.verts[i]);
        view.adj[i].reserve(nbrs.size());
        for (std::uint64_t b : nbrs) view.adj[i].push_back(view.index_of[b]);
    }
    return view;
}

std::vector<int> bfs(const DenseView& view, std::int32_t source) {
    std::vector<int> dist(view.verts.size(), -1);
    std::vector<std::int32_t> queue;
    queue.reserve(view.verts.size());
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::int32_t u = queue[head];
        for (std::int32_t w : view.adj[u]) {
            if (dist[w] == -1) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

} // namespace

std::map<std::uint64_t, int> distances_from(const ZdGraph& g, std::uint64_t a) {
    g.require_vertex(a);
    const DenseView view = materialize(g);
    const auto dist = bfs(view, view.index_of[a]);
    std::map<std::uint64_t, int> out;
    for (std::size_t i = 0; i < view.verts.size(); ++i) {
        if (dist[i] >= 0) out.emplace(view.verts[i], dist[i]);
    }
    return out;
}

int eccentricity(const ZdGraph& g, std::uint64_t a) {
    g.require_oracle_range();
    g.require_vertex(a);
    if (g.vertex_count() == 1) return 0;
    const auto nbrs = g.neighbors(a);
    if (nbrs.size() == g.vertex_count() - 1) return 1;
    std::vector<std::uint8_t> seen(g.n(), 0);
    seen[a] = 1;
    std::uint64_t covered = 1 + nbrs.size();
    for (std::uint64_t b : nbrs) seen[b] = 1;
    for (std::uint64_t b : nbrs) {
        for (std::uint64_t w : g.neighbors(b)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++covered;
            }
        }
    }
    return covered == g.vertex_count() ? 2 : 3;
}

std::vector<EccentricityRecord> eccentricities(const ZdGraph& g) {
    const DenseView view = materialize(g);
    const std::size_t v_count = view.verts.size();
    std::vector<EccentricityRecord> out;
    out.reserve(v_count);
    std::vector<std::uint32_t> stamp(v_count, 0);
    std::uint32_t epoch = 0;
    for (std::size_t i = 0; i < v_count; ++i) {
        int ecc;
        if (v_count == 1) {
            ecc = 0;
        } else if (view.adj[i].size() == v_count - 1) {
            ecc = 1;
        } else {
            ++epoch;
            stamp[i] = epoch;
            std::size_t covered = 1 + view.adj[i].size();
            for (std::int32_t j : view.adj[i]) stamp[j] = epoch;
            for (std::int32_t j : view.adj[i]) {
                for (std::int32_t k : view.adj[j]) {
                    if (stamp[k] != epoch) {
                        stamp[k] = epoch;
                        ++covered;
                    }
                }
            }
            ecc = covered == v_count ? 2 : 3;
        }
        out.push_back({view.verts[i], ecc});
    }
    return out;
}

std::vector<std::uint64_t> center(const ZdGraph& g) {
    const auto eccs = eccentricities(g);
    int min_ecc = std::numeric_limits<int>::max();
    for (const auto& rec : eccs) min_ecc = std::min(min_ecc, rec.eccentricity);
    std::vector<std::uint64_t> out;
    for (const auto& rec : eccs) {
        if (rec.eccentricity == min_ecc) out.push_back(rec.vertex);
    }
    return out;
}

std::optional<int> diameter(const ZdGraph& g) {
    const auto eccs = eccentricities(g);
    if (eccs.empty()) return std::nullopt;
    int max_ecc = 0;
    for (const auto& rec : eccs) max_ecc = std::max(max_ecc, rec.eccentricity);
    return max_ecc;
}

bool is_connected(const ZdGraph& g) {
    const DenseView view = materialize(g);
    if (view.verts.size() <= 1) return true;
    const auto dist = bfs(view, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d == -1; });
}

std::vector<Edge> bridges(const ZdGraph& g) {
    const DenseView view = materialize(g);
    const std::size_t v_count = view.verts.size();
    std::vector<Edge> out;
    std::vector<std::int32_t> disc(v_count, -1), low(v_count, 0), parent(v_count, -1);
    std::vector<std::pair<std::int32_t, std::size_t>> stack;  // (vertex, next child slot)
    std::int32_t timer = 0;
    for (std::size_t root = 0; root < v_count; ++root) {
        if (disc[root] != -1) continue;
        disc[root] = low[root] = timer++;
        stack.emplace_back(static_cast<std::int32_t>(root), 0);
        while (!stack.empty()) {
            const std::int32_t u = stack.back().first;
            const std::size_t slot = stack.back().second;
            if (slot < view.adj[u].size()) {
                stack.back().second = slot + 1;
                const std::int32_t w = view.adj[u][slot];
                if (disc[w] == -1) {
                    parent[w] = u;
                    disc[w] = low[w] = timer++;
                    stack.emplace_back(w, 0);
                } else if (w != parent[u]) {
                    low[u] = std::min(low[u], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    const std::int32_t p = stack.back().first;
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] > disc[p]) {
                        const std::uint64_t x = view.verts[p];
                        const std::uint64_t y = view.verts[u];
                        out.push_back({std::min(x, y), std::max(x, y)});
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> neighbors_by_scan(const ZdGraph& g, std::uint64_t a) {
    g.require_oracle_range();
    g.require_vertex(a);
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 1; x < g.n(); ++x) {
        if (x != a && mulmod(a, x, g.n()) == 0) out.push_back(x);
    }
    return out;
}

} // namespace zdg::oracle
