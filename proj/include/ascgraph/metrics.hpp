#pragma once
// Exact distance and combinatorial invariants: eccentricity profile, girth,
// independence number, degree statistics, biconnected blocks.

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "ascgraph/graph.hpp"

namespace ascgraph {

// Distance sentinel for unreachable vertices. Kept negative so any
// accidental arithmetic on it is loud rather than silently large.
inline constexpr int kUnreachable = -1;

namespace detail {

// dist must hold order() entries; returns the mask of reached vertices.
inline uint64_t bfs_masks(const Graph& g, int source, int* dist) {
    int n = g.order();
    for (int v = 0; v < n; ++v) dist[v] = kUnreachable;
    dist[source] = 0;
    uint64_t seen = vbit(source);
    uint64_t frontier = seen;
    int d = 0;
    while (frontier) {
        uint64_t next = 0;
        for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
        next &= ~seen;
        ++d;
        for_each_bit(next, [&](int v) { dist[v] = d; });
        seen |= next;
        frontier = next;
    }
    return seen;
}

}  // namespace detail

inline std::vector<int> bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.order())
        throw std::invalid_argument("bfs_distances: source out of range");
    std::array<int, kMaxOrder> dist;
    detail::bfs_masks(g, source, dist.data());
    return std::vector<int>(dist.begin(), dist.begin() + g.order());
}

inline bool is_connected(const Graph& g) {
    std::array<int, kMaxOrder> dist;
    return detail::bfs_masks(g, 0, dist.data()) == g.vertex_mask();
}

struct EccProfile {
    std::vector<int> ecc;
    int radius = 0;
    int diameter = 0;
    VertexSet center;
    VertexSet periphery;
};

inline EccProfile ecc_profile(const Graph& g) {
    int n = g.order();
    EccProfile p;
    p.ecc.resize(static_cast<size_t>(n));
    p.radius = kMaxOrder + 1;
    p.diameter = 0;
    std::array<int, kMaxOrder> dist;
    for (int v = 0; v < n; ++v) {
        if (detail::bfs_masks(g, v, dist.data()) != g.vertex_mask())
            throw std::invalid_argument("ecc_profile: graph is disconnected");
        int e = 0;
        for (int u = 0; u < n; ++u) e = std::max(e, dist[u]);
        p.ecc[static_cast<size_t>(v)] = e;
        p.radius = std::min(p.radius, e);
        p.diameter = std::max(p.diameter, e);
    }
    for (int v = 0; v < n; ++v) {
        if (p.ecc[static_cast<size_t>(v)] == p.radius) p.center.add(v);
        if (p.ecc[static_cast<size_t>(v)] == p.diameter) p.periphery.add(v);
    }
    return p;
}

// Length of a shortest cycle; nullopt for forests.
inline std::optional<int> girth(const Graph& g) {
    int n = g.order();
    int best = n + 1;
    std::array<int, kMaxOrder> dist;
    std::array<int, kMaxOrder> parent;
    std::array<int, kMaxOrder> queue;
    for (int s = 0; s < n; ++s) {
        for (int v = 0; v < n; ++v) dist[v] = kUnreachable;
        dist[s] = 0;
        parent[s] = -1;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[head++];
            if (2 * dist[u] >= best) break;
            for_each_bit(g.neighbors(u), [&](int w) {
                if (dist[w] == kUnreachable) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue[tail++] = w;
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            });
        }
    }
    if (best > n) return std::nullopt;
    return best;
}

namespace detail {

inline int clique_cover_bound(const Graph& g, uint64_t cand) {
    int colors = 0;
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        uint64_t clique = vbit(v);
        uint64_t rest = cand;
        while (rest) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            if ((g.neighbors(u) & clique) == clique) {
                clique |= vbit(u);
                cand &= ~vbit(u);
            }
        }
        ++colors;
    }
    return colors;
}

inline void mis_search(const Graph& g, uint64_t cand, int chosen, uint64_t cur, int& best,
                       uint64_t& best_set) {
    // vertices with no candidate neighbors are free
    for (;;) {
        uint64_t free_found = 0;
        for_each_bit(cand, [&](int v) {
            if ((g.neighbors(v) & cand) == 0) free_found |= vbit(v);
        });
        if (!free_found) break;
        chosen += std::popcount(free_found);
        cur |= free_found;
        cand &= ~free_found;
    }
    if (!cand) {
        if (chosen > best) {
            best = chosen;
            best_set = cur;
        }
        return;
    }
    if (chosen + std::popcount(cand) <= best) return;
    if (chosen + clique_cover_bound(g, cand) <= best) return;

    int v = -1, vd = -1;
    for_each_bit(cand, [&](int u) {
        int d = popcount(g.neighbors(u) & cand);
        if (d > vd) {
            vd = d;
            v = u;
        }
    });
    mis_search(g, cand & ~(g.neighbors(v) | vbit(v)), chosen + 1, cur | vbit(v), best, best_set);
    mis_search(g, cand & ~vbit(v), chosen, cur, best, best_set);
}

}  // namespace detail

inline VertexSet max_independent_set(const Graph& g) {
    int best = 0;
    uint64_t best_set = 0;
    detail::mis_search(g, g.vertex_mask(), 0, 0, best, best_set);
    return VertexSet(best_set);
}

inline int independence_number(const Graph& g) { return max_independent_set(g).count(); }

struct BlockDecomposition {
    std::vector<VertexSet> blocks;
    VertexSet cut_vertices;
};

inline BlockDecomposition blocks(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("blocks: graph is disconnected");
    int n = g.order();
    BlockDecomposition out;
    if (n == 1) {
        out.blocks.push_back(VertexSet::single(0));
        return out;
    }
    std::array<int, kMaxOrder> disc{}, low{}, parent{};
    parent.fill(-1);
    disc.fill(0);
    int timer = 0;
    std::vector<std::pair<int, int>> edge_stack;

    // iterative DFS: (vertex, neighbor iterator as mask of unprocessed)
    std::array<uint64_t, kMaxOrder> todo{};
    std::vector<int> stack;
    stack.reserve(static_cast<size_t>(n));
    disc[0] = low[0] = ++timer;
    todo[0] = g.neighbors(0);
    stack.push_back(0);
    int root_children = 0;
    while (!stack.empty()) {
        int u = stack.back();
        if (todo[static_cast<size_t>(u)]) {
            int v = std::countr_zero(todo[static_cast<size_t>(u)]);
            todo[static_cast<size_t>(u)] &= todo[static_cast<size_t>(u)] - 1;
            if (v == parent[static_cast<size_t>(u)]) continue;
            if (disc[static_cast<size_t>(v)] == 0) {
                edge_stack.emplace_back(u, v);
                parent[static_cast<size_t>(v)] = u;
                disc[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = ++timer;
                todo[static_cast<size_t>(v)] = g.neighbors(v);
                if (u == 0) ++root_children;
                stack.push_back(v);
            } else if (disc[static_cast<size_t>(v)] < disc[static_cast<size_t>(u)]) {
                edge_stack.emplace_back(u, v);
                low[static_cast<size_t>(u)] =
                    std::min(low[static_cast<size_t>(u)], disc[static_cast<size_t>(v)]);
            }
        } else {
            stack.pop_back();
            int p = parent[static_cast<size_t>(u)];
            if (p < 0) continue;
            low[static_cast<size_t>(p)] = std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(u)]);
            if (low[static_cast<size_t>(u)] >= disc[static_cast<size_t>(p)]) {
                VertexSet block;
                while (true) {
                    auto [a, b] = edge_stack.back();
                    edge_stack.pop_back();
                    block.add(a);
                    block.add(b);
                    if (a == p && b == u) break;
                }
                out.blocks.push_back(block);
                if (p != 0) out.cut_vertices.add(p);
            }
        }
    }
    if (root_children >= 2) out.cut_vertices.add(0);
    return out;
}

struct DegreeStats {
    std::vector<int> sequence;      // sorted descending
    int min_degree = 0;
    int max_degree = 0;
    std::vector<int> top_vertices;  // ascending vertex ids attaining max_degree
};

inline DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    int n = g.order();
    s.sequence.reserve(static_cast<size_t>(n));
    s.min_degree = kMaxOrder;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        s.sequence.push_back(d);
        s.min_degree = std::min(s.min_degree, d);
        s.max_degree = std::max(s.max_degree, d);
    }
    std::sort(s.sequence.begin(), s.sequence.end(), std::greater<int>());
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == s.max_degree) s.top_vertices.push_back(v);
    return s;
}

inline bool is_cycle_graph(const Graph& g) {
    if (g.order() < 3 || g.size() != g.order()) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return false;
    return is_connected(g);
}

// All unordered pairs at cycle distance floor(n/2); input must be a cycle.
inline std::vector<std::pair<int, int>> antipodal_pairs(const Graph& g) {
    if (!is_cycle_graph(g)) throw std::invalid_argument("antipodal_pairs: input is not a cycle");
    int half = g.order() / 2;
    std::vector<std::pair<int, int>> out;
    std::array<int, kMaxOrder> dist;
    for (int u = 0; u < g.order(); ++u) {
        detail::bfs_masks(g, u, dist.data());
        for (int v = u + 1; v < g.order(); ++v)
            if (dist[v] == half) out.emplace_back(u, v);
    }
    return out;
}

}  // namespace ascgraph
