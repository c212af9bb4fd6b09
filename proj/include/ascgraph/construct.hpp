#pragma once
// Deterministic builders for the named families and extremal constructions.
// Constructors are never trusted blind: the nontrivial ones re-verify their
// own postconditions and fail loudly.

#include <string>
#include <vector>

#include "ascgraph/classify.hpp"
#include "ascgraph/fixtures.hpp"

namespace ascgraph {

enum class FamilyId {
    cycle,
    path,
    complete,
    star,
    kn_minus_edge,
    theta,
    cycle_pendant,
    girth_extremal,
    z,
    regular_asc,
    ap_max_size,
    ap_degree,
    ap_top_extremal,
};

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs order >= 3");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return b.build();
}

inline Graph path(int n) {
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return b.build();
}

inline Graph complete(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
    return b.build();
}

inline Graph star(int n) {
    if (n < 2) throw std::invalid_argument("star needs order >= 2");
    GraphBuilder b(n);
    for (int i = 1; i < n; ++i) b.add_edge(0, i);
    return b.build();
}

inline Graph complete_minus_edge(int n) {
    if (n < 3) throw std::invalid_argument("K_n minus an edge needs order >= 3");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(i == 0 && j == 1)) b.add_edge(i, j);
    return b.build();
}

// Theta graph: vertex 0 and 1 joined by three internally disjoint paths of
// edge lengths a, b, c (sorted on entry; at most one length may be 1).
inline Graph theta(int a, int b, int c) {
    int len[3] = {a, b, c};
    std::sort(len, len + 3);
    if (len[0] < 1) throw std::invalid_argument("theta: path lengths must be positive");
    if (len[1] == 1) throw std::invalid_argument("theta: two length-1 paths would be a multi-edge");
    int n = len[0] + len[1] + len[2] - 1;
    if (n > kMaxOrder) throw std::invalid_argument("theta exceeds supported order");
    GraphBuilder g(n);
    int next = 2;
    for (int p = 0; p < 3; ++p) {
        int prev = 0;
        for (int i = 1; i < len[p]; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, 1);
    }
    return g.build();
}

// The unique unicyclic almost self-centered graph: C_{n-1} plus one pendant.
inline Graph cycle_pendant(int n) {
    if (n < 7 || n % 2 == 0)
        throw std::invalid_argument("cycle_pendant needs odd order >= 7");
    return attach_pendant(cycle(n - 1), 0);
}

// Girth-extremal ASC graph of even order n >= 12: theta(2k,2k,n-4k) with a
// pendant at a degree-3 vertex, k = floor(n/6). Girth comes out to 4k.
inline Graph girth_extremal_asc(int n) {
    if (n < 12 || n % 2 != 0)
        throw std::invalid_argument("girth_extremal_asc needs even order >= 12");
    int k = n / 6;
    Graph t = theta(2 * k, 2 * k, n - 4 * k);
    // vertex 0 is the lexicographically smaller degree-3 junction
    return attach_pendant(t, 0);
}

// Z(n,r): cycle v_1..v_2r, a pendant at v_1, and n-2r-1 extra vertices each
// adjacent to v_1 and v_3. ASC with radius r and independence number n-r.
inline Graph z_graph(int n, int r) {
    if (r < 2) throw std::invalid_argument("z_graph needs radius >= 2");
    if (n < 2 * r + 1) throw std::invalid_argument("z_graph needs order >= 2r+1");
    if (n > kMaxOrder) throw std::invalid_argument("z_graph exceeds supported order");
    GraphBuilder b(n);
    for (int i = 0; i < 2 * r; ++i) b.add_edge(i, (i + 1) % (2 * r));
    b.add_edge(0, 2 * r);
    for (int i = 2 * r + 1; i < n; ++i) {
        b.add_edge(i, 0);
        b.add_edge(i, 2);
    }
    return b.build();
}

namespace detail {
// residues taken in {1..k}
inline int mod1k(int i, int k) { return ((i - 1) % k + k) % k + 1; }
}  // namespace detail

// Minimum-order k-regular ASC graph for k >= 4: order 2k+2, vertices
// x_0, x_1..x_k, y_0, y_1..y_k with x_i at index i and y_j at index k+1+j.
// Adjacency follows the explicit neighbor lists (even and odd k differ);
// the builder symmetrizes them and insists on k-regularity.
inline Graph regular_asc(int k) {
    if (k < 4)
        throw std::invalid_argument(
            "regular_asc needs k >= 4 (no 3-regular instance below order 12; see the stored "
            "order-12 certificate)");
    int n = 2 * k + 2;
    if (n > kMaxOrder) throw std::invalid_argument("regular_asc exceeds supported order");
    auto X = [&](int i) { return detail::mod1k(i, k); };
    auto Y = [&](int i) { return k + 1 + detail::mod1k(i, k); };
    GraphBuilder b(n);
    for (int i = 1; i <= k; ++i) b.add_edge(0, X(i));      // N(x_0) = A
    for (int i = 1; i <= k; ++i) b.add_edge(k + 1, Y(i));  // N(y_0) = B
    if (k % 2 == 0) {
        for (int i = 1; i <= k / 2; ++i) {
            b.add_edge(X(i), X(i + k / 2));
            for (int t = i; t <= i + k - 3; ++t) b.add_edge(X(i), Y(t));
            b.add_edge(Y(i), Y(i + k / 2));
        }
        for (int j = k / 2 + 1; j <= k; ++j)
            for (int t = j; t <= j + k - 3; ++t) b.add_edge(X(j), Y(t));
    } else {
        for (int i = 2; i <= (k + 1) / 2; ++i) b.add_edge(X(1), X(i));
        for (int i = 1; i <= (k - 1) / 2; ++i) b.add_edge(X(1), Y(i));
        for (int i = 2; i <= (k + 1) / 2; ++i)
            for (int t = 1; t <= k; ++t)
                if (t != i - 1 && t != k) b.add_edge(X(i), Y(t));
        for (int j = (k + 3) / 2; j <= k; ++j)
            for (int t = 1; t <= k; ++t)
                if (t != j - (k + 1) / 2) b.add_edge(X(j), Y(t));
        for (int i = 1; i <= (k - 1) / 2; ++i) b.add_edge(Y(k), Y(i));
    }
    Graph g = b.build();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != k)
            throw std::logic_error("regular_asc: adjacency lists did not produce a " +
                                   std::to_string(k) + "-regular graph (vertex " +
                                   std::to_string(v) + " has degree " +
                                   std::to_string(g.degree(v)) + ")");
    return g;
}

// Maximum-size AP graph: complement of K_1 + m K_2 (odd n) or of
// K_1 + m K_2 + P_3 (even n); size floor((n-1)^2/2).
inline Graph ap_max_size(int n) {
    if (n < 3) throw std::invalid_argument("ap_max_size needs order >= 3");
    if (n > kMaxOrder) throw std::invalid_argument("ap_max_size exceeds supported order");
    GraphBuilder inner(n);
    if (n % 2 == 1) {
        for (int i = 0; i < (n - 1) / 2; ++i) inner.add_edge(1 + 2 * i, 2 + 2 * i);
    } else {
        for (int i = 0; i < (n - 4) / 2; ++i) inner.add_edge(1 + 2 * i, 2 + 2 * i);
        inner.add_edge(n - 3, n - 2);
        inner.add_edge(n - 2, n - 1);
    }
    return complement(inner.build());
}

namespace detail {

inline bool ap_delta_invariant_holds(const Graph& g, int delta) {
    auto stats = degree_stats(g);
    if (stats.max_degree != delta) return false;
    if (!is_connected(g)) return false;
    auto p = ecc_profile(g);
    if (p.periphery.count() != g.order() - 1) return false;
    // some top vertex must have a non-central neighbor of degree 2
    for (int t : stats.top_vertices) {
        bool found = false;
        for_each_bit(g.neighbors(t), [&](int u) {
            if (g.degree(u) == 2 && !p.center.contains(u)) found = true;
        });
        if (found) return true;
    }
    return false;
}

// lowest-indexed degree-2 non-central neighbor of a top vertex
inline int ap_duplication_pivot(const Graph& g) {
    auto stats = degree_stats(g);
    auto p = ecc_profile(g);
    int best = -1;
    for (int t : stats.top_vertices) {
        for_each_bit(g.neighbors(t), [&](int u) {
            if (g.degree(u) == 2 && !p.center.contains(u) && (best < 0 || u < best)) best = u;
        });
    }
    return best;
}

// Insert `count` new vertices into edge (u,v), turning it into a path.
inline Graph subdivide_edge(const Graph& g, int u, int v, int count) {
    int n = g.order() + count;
    if (n > kMaxOrder) throw std::invalid_argument("subdivision exceeds supported order");
    GraphBuilder b(n);
    for (int a = 0; a < g.order(); ++a)
        for_each_bit(g.neighbors(a), [&](int c) {
            if (c > a && !(a == std::min(u, v) && c == std::max(u, v))) b.add_edge(a, c);
        });
    int prev = u;
    for (int i = 0; i < count; ++i) {
        b.add_edge(prev, g.order() + i);
        prev = g.order() + i;
    }
    b.add_edge(prev, v);
    return b.build();
}

// Grow an AP graph with max degree 3 by four vertices: subdivide a multiset
// of four edges (the path-lengthening step of the base-family recipe) and
// keep the first choice that preserves the construction invariant.
inline Graph ap_base_stretch(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.order(); ++u)
        for_each_bit(g.neighbors(u), [&](int v) {
            if (v > u) edges.emplace_back(u, v);
        });
    size_t E = edges.size();
    for (size_t i = 0; i < E; ++i)
        for (size_t j = i; j < E; ++j)
            for (size_t l = j; l < E; ++l)
                for (size_t m = l; m < E; ++m) {
                    size_t pick[4] = {i, j, l, m};
                    std::vector<std::pair<size_t, int>> chosen;  // edge index -> multiplicity
                    for (size_t p : pick) {
                        bool seen = false;
                        for (auto& [e, c] : chosen)
                            if (e == p) {
                                ++c;
                                seen = true;
                            }
                        if (!seen) chosen.emplace_back(p, 1);
                    }
                    Graph h = g;
                    for (auto& [e, c] : chosen)
                        h = subdivide_edge(h, edges[e].first, edges[e].second, c);
                    if (ap_delta_invariant_holds(h, 3)) return h;
                }
    throw std::logic_error("ap_base_stretch: no valid four-edge subdivision found for order " +
                           std::to_string(g.order()));
}

inline Graph ap_base_3(int n, const FixtureStore& store) {
    if (n < 7) throw std::invalid_argument("no AP graph with max degree 3 below order 7");
    int m0 = 7 + (n - 7) % 4;
    Graph g = store.get("ap_base_" + std::to_string(m0));
    while (g.order() < n) g = ap_base_stretch(g);
    return g;
}

}  // namespace detail

// AP graph of order n with max degree exactly delta. The star covers
// delta = n-1; delta in {3..n-4} comes from a base of order n-delta+3 with
// max degree 3, grown by repeatedly duplicating a degree-2 non-central
// neighbor of a top vertex (each step adds one to both order and degree).
// delta in {n-3, n-2} is impossible for AP graphs and is rejected.
inline Graph ap_with_max_degree(int n, int delta,
                                const FixtureStore& store = FixtureStore::default_store()) {
    if (n < 7) throw std::invalid_argument("ap_with_max_degree needs order >= 7");
    if (n > kMaxOrder) throw std::invalid_argument("ap_with_max_degree exceeds supported order");
    if (delta == n - 1) return star(n);
    if (delta < 3 || delta > n - 4)
        throw std::invalid_argument(
            "no AP graph of order " + std::to_string(n) + " has max degree " +
            std::to_string(delta) + " (the possible values are 3..n-4 and n-1)");
    Graph g = detail::ap_base_3(n - delta + 3, store);
    for (int d = 3; d < delta; ++d) {
        int pivot = detail::ap_duplication_pivot(g);
        if (pivot < 0) throw std::logic_error("ap_with_max_degree: duplication pivot missing");
        g = duplicate_vertex(g, pivot);
        if (!detail::ap_delta_invariant_holds(g, d + 1))
            throw std::logic_error("ap_with_max_degree: duplication step broke the invariant");
    }
    if (!is_ap(g) || degree_stats(g).max_degree != delta)
        throw std::logic_error("ap_with_max_degree: postcondition failed");
    return g;
}

// The unique AP graph of order n >= 8 with max degree n-4 attaining n-5 top
// vertices: blow a non-central degree-3 vertex of the order-7 base into
// K_{n-6}.
inline Graph ap_top_extremal(int n, const FixtureStore& store = FixtureStore::default_store()) {
    if (n < 8) throw std::invalid_argument("ap_top_extremal needs order >= 8");
    if (n > kMaxOrder) throw std::invalid_argument("ap_top_extremal exceeds supported order");
    Graph base = store.get("ap_base_7");
    auto p = ecc_profile(base);
    for (int v = 0; v < base.order(); ++v) {
        if (base.degree(v) != 3 || p.center.contains(v)) continue;
        Graph g = blow_up(base, v, n - 6);
        auto stats = degree_stats(g);
        if (!is_ap(g) || stats.max_degree != n - 4 ||
            static_cast<int>(stats.top_vertices.size()) != n - 5)
            continue;
        return g;
    }
    throw std::logic_error("ap_top_extremal: no qualifying blow-up vertex in the base fixture");
}

// CLI-facing dispatch.
inline Graph build_family(FamilyId id, const std::vector<int>& params,
                          const FixtureStore& store = FixtureStore::default_store()) {
    auto need = [&](size_t c, const char* what) {
        if (params.size() != c)
            throw std::invalid_argument(std::string("family expects parameters: ") + what);
    };
    switch (id) {
        case FamilyId::cycle: need(1, "n"); return cycle(params[0]);
        case FamilyId::path: need(1, "n"); return path(params[0]);
        case FamilyId::complete: need(1, "n"); return complete(params[0]);
        case FamilyId::star: need(1, "n"); return star(params[0]);
        case FamilyId::kn_minus_edge: need(1, "n"); return complete_minus_edge(params[0]);
        case FamilyId::theta: need(3, "a b c"); return theta(params[0], params[1], params[2]);
        case FamilyId::cycle_pendant: need(1, "n"); return cycle_pendant(params[0]);
        case FamilyId::girth_extremal: need(1, "n"); return girth_extremal_asc(params[0]);
        case FamilyId::z: need(2, "n r"); return z_graph(params[0], params[1]);
        case FamilyId::regular_asc: need(1, "k"); return regular_asc(params[0]);
        case FamilyId::ap_max_size: need(1, "n"); return ap_max_size(params[0]);
        case FamilyId::ap_degree: need(2, "n delta"); return ap_with_max_degree(params[0], params[1], store);
        case FamilyId::ap_top_extremal: need(1, "n"); return ap_top_extremal(params[0], store);
    }
    throw std::invalid_argument("unknown family");
}

inline std::optional<FamilyId> family_from_name(const std::string& s) {
    if (s == "cycle") return FamilyId::cycle;
    if (s == "path") return FamilyId::path;
    if (s == "complete") return FamilyId::complete;
    if (s == "star") return FamilyId::star;
    if (s == "kn-minus-edge") return FamilyId::kn_minus_edge;
    if (s == "theta") return FamilyId::theta;
    if (s == "cycle-pendant") return FamilyId::cycle_pendant;
    if (s == "girth-extremal") return FamilyId::girth_extremal;
    if (s == "z") return FamilyId::z;
    if (s == "regular-asc") return FamilyId::regular_asc;
    if (s == "ap-max-size") return FamilyId::ap_max_size;
    if (s == "ap-degree") return FamilyId::ap_degree;
    if (s == "ap-top") return FamilyId::ap_top_extremal;
    return std::nullopt;
}

}  // namespace ascgraph
