#pragma once
// Recognizers for the graph classes the harness works with: self-centered,
// almost self-centered (ASC), almost peripheral (AP), unicyclic, theta,
// binocle.

#include <optional>
#include <vector>

#include "ascgraph/metrics.hpp"

namespace ascgraph {

// Three internally disjoint (x,y)-paths of edge lengths a <= b <= c.
// At most one length may be 1, otherwise the graph would need a multi-edge.
struct ThetaSpec {
    int a = 0, b = 0, c = 0;
    int order() const { return a + b + c - 1; }
    bool operator==(const ThetaSpec&) const = default;
};

struct BinocleWitness {
    VertexSet cycle_a;       // contains the smaller junction vertex
    VertexSet cycle_b;
    std::vector<int> path;   // junction-to-junction; a single vertex when the cycles share it
};

inline bool is_self_centered(const Graph& g) {
    auto p = ecc_profile(g);
    return p.radius == p.diameter;
}

// Exactly n-2 central vertices (equivalently: exactly 2 peripheral ones).
inline bool is_asc(const Graph& g) {
    if (g.order() < 3) return false;
    auto p = ecc_profile(g);
    return p.center.count() == g.order() - 2;
}

// Exactly n-1 peripheral vertices (equivalently: a unique central vertex).
inline bool is_ap(const Graph& g) {
    if (g.order() < 2) return false;
    auto p = ecc_profile(g);
    return p.periphery.count() == g.order() - 1;
}

inline bool is_unicyclic(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("is_unicyclic: graph is disconnected");
    return g.size() == g.order();
}

inline int top_vertex_count(const Graph& g) {
    return static_cast<int>(degree_stats(g).top_vertices.size());
}

inline std::optional<ThetaSpec> recognize_theta(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("recognize_theta: graph is disconnected");
    int n = g.order();
    if (n < 4 || g.size() != n + 1) return std::nullopt;
    int x = -1, y = -1;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d == 3) {
            if (x < 0)
                x = v;
            else if (y < 0)
                y = v;
            else
                return std::nullopt;
        } else if (d != 2) {
            return std::nullopt;
        }
    }
    if (y < 0) return std::nullopt;
    if (blocks(g).blocks.size() != 1) return std::nullopt;  // thetas are 2-connected

    int len[3];
    int idx = 0;
    bool ok = true;
    for_each_bit(g.neighbors(x), [&](int s) {
        int prev = x, cur = s, L = 1;
        while (cur != y && g.degree(cur) == 2) {
            uint64_t nb = g.neighbors(cur) & ~vbit(prev);
            prev = cur;
            cur = std::countr_zero(nb);
            ++L;
        }
        if (cur != y) ok = false;
        if (idx < 3) len[idx] = L;
        ++idx;
    });
    if (!ok || idx != 3) return std::nullopt;
    std::sort(len, len + 3);
    ThetaSpec spec{len[0], len[1], len[2]};
    if (spec.order() != n) return std::nullopt;
    return spec;
}

// Whole-graph binocle recognition: two cycles joined by a (possibly trivial)
// path meeting each cycle in a single vertex.
inline std::optional<BinocleWitness> recognize_binocle(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("recognize_binocle: graph is disconnected");
    int n = g.order();
    if (g.size() != n + 1) return std::nullopt;

    int deg3 = 0, deg4 = 0, v3a = -1, v3b = -1, v4 = -1;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d == 2) continue;
        if (d == 3) {
            ++deg3;
            (v3a < 0 ? v3a : v3b) = v;
        } else if (d == 4) {
            ++deg4;
            v4 = v;
        } else {
            return std::nullopt;
        }
    }

    if (deg4 == 1 && deg3 == 0) {
        // two cycles sharing the degree-4 vertex: removing it must leave
        // exactly two paths whose endpoints are its neighbors
        uint64_t rest = g.vertex_mask() & ~vbit(v4);
        BinocleWitness w;
        std::vector<uint64_t> comps;
        uint64_t todo = rest;
        while (todo) {
            int s = std::countr_zero(todo);
            uint64_t comp = vbit(s), frontier = comp;
            while (frontier) {
                uint64_t nxt = 0;
                for_each_bit(frontier, [&](int u) { nxt |= g.neighbors(u); });
                nxt &= rest & ~comp;
                comp |= nxt;
                frontier = nxt;
            }
            comps.push_back(comp);
            todo &= ~comp;
        }
        if (comps.size() != 2) return std::nullopt;
        for (uint64_t comp : comps) {
            // must be a path whose two endpoints are adjacent to v4
            int edges_inside = 0, ends = 0;
            bool ok = true;
            for_each_bit(comp, [&](int u) {
                int din = popcount(g.neighbors(u) & comp);
                edges_inside += din;
                if (din > 2) ok = false;
                if (din <= 1) {
                    ++ends;
                    if (!g.adjacent(u, v4)) ok = false;
                } else if (g.adjacent(u, v4)) {
                    ok = false;  // would make deg > 2
                }
            });
            edges_inside /= 2;
            int cnt = popcount(comp);
            if (!ok || edges_inside != cnt - 1) return std::nullopt;
            if (cnt == 1) return std::nullopt;  // needs two distinct attachment edges
            if (ends != 2) return std::nullopt;
        }
        if ((comps[0] & vbit(std::countr_zero(comps[0] | comps[1]))) == 0) std::swap(comps[0], comps[1]);
        w.cycle_a = VertexSet(comps[0] | vbit(v4));
        w.cycle_b = VertexSet(comps[1] | vbit(v4));
        w.path = {v4};
        return w;
    }

    if (deg3 == 2 && deg4 == 0) {
        // cycle -- path -- cycle; the two junctions are the degree-3 vertices
        auto bd = blocks(g);
        std::vector<int> cyc;
        std::vector<uint64_t> bridges;
        for (size_t i = 0; i < bd.blocks.size(); ++i) {
            const auto& B = bd.blocks[i];
            int bn = B.count();
            int be = 0;
            for_each_bit(B.bits(), [&](int u) { be += popcount(g.neighbors(u) & B.bits()); });
            be /= 2;
            if (bn == 2)
                bridges.push_back(B.bits());
            else if (be == bn)
                cyc.push_back(static_cast<int>(i));
            else
                return std::nullopt;  // block that is neither a bridge nor a cycle
        }
        if (cyc.size() != 2) return std::nullopt;
        uint64_t ca = bd.blocks[static_cast<size_t>(cyc[0])].bits();
        uint64_t cb = bd.blocks[static_cast<size_t>(cyc[1])].bits();
        if (ca & cb) return std::nullopt;  // nontrivial path: cycles are disjoint
        int u = (ca & vbit(v3a)) ? v3a : ((ca & vbit(v3b)) ? v3b : -1);
        int v = (cb & vbit(v3a)) ? v3a : ((cb & vbit(v3b)) ? v3b : -1);
        if (u < 0 || v < 0 || u == v) return std::nullopt;
        BinocleWitness w;
        std::vector<int> path;
        // the path leaves u by its unique neighbor outside cycle_a
        uint64_t off = g.neighbors(u) & ~ca;
        if (std::popcount(off) != 1) return std::nullopt;
        path.push_back(u);
        int prev = u, cur = std::countr_zero(off);
        while (cur != v) {
            path.push_back(cur);
            if (g.degree(cur) != 2) return std::nullopt;
            uint64_t nb = g.neighbors(cur) & ~vbit(prev);
            prev = cur;
            cur = std::countr_zero(nb);
            if (path.size() > static_cast<size_t>(n)) return std::nullopt;
        }
        path.push_back(v);
        // everything must be accounted for: two cycles plus path interior
        uint64_t seen = ca | cb;
        for (size_t i = 1; i + 1 < path.size(); ++i) seen |= vbit(path[i]);
        if (seen != g.vertex_mask()) return std::nullopt;
        if ((ca & vbit(std::countr_zero(ca | cb))) == 0) {
            std::swap(ca, cb);
            std::reverse(path.begin(), path.end());
        }
        w.cycle_a = VertexSet(ca);
        w.cycle_b = VertexSet(cb);
        w.path = std::move(path);
        return w;
    }

    return std::nullopt;
}

struct Classification {
    bool connected = false;
    bool self_centered = false;
    bool almost_self_centered = false;
    bool almost_peripheral = false;
    bool unicyclic = false;
    int central_count = 0;
    int peripheral_count = 0;
    int top_count = 0;
    int radius = 0;
    int diameter = 0;
    std::optional<ThetaSpec> theta;
    std::optional<BinocleWitness> binocle;
};

inline Classification classify(const Graph& g) {
    Classification c;
    c.connected = is_connected(g);
    c.top_count = top_vertex_count(g);
    if (!c.connected) return c;
    auto p = ecc_profile(g);
    c.radius = p.radius;
    c.diameter = p.diameter;
    c.central_count = p.center.count();
    c.peripheral_count = p.periphery.count();
    c.self_centered = p.radius == p.diameter;
    c.almost_self_centered = g.order() >= 3 && c.central_count == g.order() - 2;
    c.almost_peripheral = g.order() >= 2 && c.peripheral_count == g.order() - 1;
    c.unicyclic = g.size() == g.order();
    c.theta = recognize_theta(g);
    c.binocle = recognize_binocle(g);
    return c;
}

}  // namespace ascgraph
