#pragma once
// Canonical labeling (partition refinement + individualization with
// automorphism pruning) and isomorph-free exhaustive generation of graphs
// by canonical augmentation: one vertex is added per level and a child is
// kept only when the new vertex lies in the orbit of the canonically
// deleted one. Memory stays O(depth); no global dedup set is ever built.

#include <algorithm>
#include <array>
#include <cstring>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ascgraph/graph.hpp"

namespace ascgraph {

namespace detail {

// ---- ordered partition ---------------------------------------------------

struct Part {
    int n = 0;
    std::array<uint8_t, kMaxOrder> order{};   // vertices in partition order
    std::array<uint8_t, kMaxOrder> len{};     // cell length, valid at cell starts
    std::array<uint64_t, kMaxOrder> cmask{};  // member mask, valid at cell starts

    void init_unit(int nn) {
        n = nn;
        for (int i = 0; i < nn; ++i) order[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
        len.fill(0);
        len[0] = static_cast<uint8_t>(nn);
        cmask[0] = low_bits(nn);
    }
    bool discrete() const {
        for (int s = 0; s < n; s += len[static_cast<size_t>(s)])
            if (len[static_cast<size_t>(s)] != 1) return false;
        return true;
    }
};

// Equitable refinement, worklist style: cells are split by neighbor counts
// against pending splitter cells; every fragment of a split cell becomes a
// splitter again. Deterministic and relabeling-equivariant.
inline void refine(const uint64_t* adj, Part& p) {
    uint8_t queue[2 * kMaxOrder];
    bool inq[kMaxOrder] = {};
    int qh = 0, qt = 0;
    for (int s = 0; s < p.n; s += p.len[static_cast<size_t>(s)]) {
        queue[qt++] = static_cast<uint8_t>(s);
        inq[s] = true;
    }
    auto enqueue = [&](int s) {
        if (!inq[s]) {
            inq[s] = true;
            queue[qt] = static_cast<uint8_t>(s);
            qt = (qt + 1) % (2 * kMaxOrder);
        }
    };
    while (qh != qt) {
        int ws = queue[qh];
        qh = (qh + 1) % (2 * kMaxOrder);
        inq[ws] = false;
        uint64_t wmask = p.cmask[static_cast<size_t>(ws)];
        uint64_t wnbr = 0;
        for_each_bit(wmask, [&](int v) { wnbr |= adj[v]; });
        for (int cs = 0; cs < p.n;) {
            int cl = p.len[static_cast<size_t>(cs)];
            if (cl > 1 && (p.cmask[static_cast<size_t>(cs)] & wnbr)) {
                int key[kMaxOrder];
                bool differ = false;
                for (int i = 0; i < cl; ++i) {
                    key[i] = popcount(adj[p.order[static_cast<size_t>(cs + i)]] & wmask);
                    if (key[i] != key[0]) differ = true;
                }
                if (differ) {
                    // stable insertion sort of the slice by key
                    for (int i = 1; i < cl; ++i) {
                        int k = key[i];
                        uint8_t v = p.order[static_cast<size_t>(cs + i)];
                        int j = i - 1;
                        while (j >= 0 && key[j] > k) {
                            key[j + 1] = key[j];
                            p.order[static_cast<size_t>(cs + j + 1)] = p.order[static_cast<size_t>(cs + j)];
                            --j;
                        }
                        key[j + 1] = k;
                        p.order[static_cast<size_t>(cs + j + 1)] = v;
                    }
                    int start = cs;
                    auto close_cell = [&](int end) {
                        p.len[static_cast<size_t>(start)] = static_cast<uint8_t>(end - start);
                        uint64_t m = 0;
                        for (int t = start; t < end; ++t) m |= vbit(p.order[static_cast<size_t>(t)]);
                        p.cmask[static_cast<size_t>(start)] = m;
                        enqueue(start);
                    };
                    for (int i = 1; i < cl; ++i) {
                        if (key[i] != key[i - 1]) {
                            close_cell(cs + i);
                            start = cs + i;
                        }
                    }
                    close_cell(cs + cl);
                }
            }
            cs += cl;
        }
    }
}

using Perm = std::array<uint8_t, kMaxOrder>;

struct CanonOut {
    std::array<uint8_t, kMaxOrder> lab{};        // lab[pos] = vertex
    std::array<uint8_t, kMaxOrder> pos{};        // pos[vertex] = canonical position
    std::array<uint64_t, kMaxOrder> canon_rows{};
    std::vector<Perm> gens;
    std::array<uint8_t, kMaxOrder> orbit{};      // min vertex of each orbit
};

struct CanonSearch {
    const uint64_t* adj = nullptr;
    int n = 0;

    bool have_first = false;
    std::array<uint8_t, kMaxOrder> first_lab{};
    std::array<uint64_t, kMaxOrder> first_rows{};
    std::array<uint8_t, kMaxOrder> first_path{};
    int first_path_len = 0;

    bool have_best = false;
    std::array<uint8_t, kMaxOrder> best_lab{};
    std::array<uint64_t, kMaxOrder> best_rows{};
    std::array<uint8_t, kMaxOrder> best_path{};
    int best_path_len = 0;

    std::vector<Perm> gens;
    std::array<uint8_t, kMaxOrder> path{};
    int path_len = 0;
    int jump_to = -1;

    void relabel(const std::array<uint8_t, kMaxOrder>& lab, std::array<uint64_t, kMaxOrder>& out) const {
        std::array<uint8_t, kMaxOrder> inv{};
        for (int p = 0; p < n; ++p) inv[lab[static_cast<size_t>(p)]] = static_cast<uint8_t>(p);
        for (int p = 0; p < n; ++p) {
            uint64_t row = adj[lab[static_cast<size_t>(p)]];
            uint64_t nr = 0;
            while (row) {
                int v = std::countr_zero(row);
                row &= row - 1;
                nr |= vbit(inv[static_cast<size_t>(v)]);
            }
            out[static_cast<size_t>(p)] = nr;
        }
    }

    static int cmp_rows(const std::array<uint64_t, kMaxOrder>& a,
                        const std::array<uint64_t, kMaxOrder>& b, int n) {
        for (int i = 0; i < n; ++i) {
            if (a[static_cast<size_t>(i)] != b[static_cast<size_t>(i)])
                return a[static_cast<size_t>(i)] < b[static_cast<size_t>(i)] ? -1 : 1;
        }
        return 0;
    }

    static int common_prefix(const std::array<uint8_t, kMaxOrder>& a, int alen,
                             const std::array<uint8_t, kMaxOrder>& b, int blen) {
        int m = std::min(alen, blen);
        for (int i = 0; i < m; ++i)
            if (a[static_cast<size_t>(i)] != b[static_cast<size_t>(i)]) return i;
        return m;
    }

    void record_gen(const std::array<uint8_t, kMaxOrder>& from_lab,
                    const std::array<uint8_t, kMaxOrder>& to_lab) {
        Perm g{};
        for (int p = 0; p < n; ++p) g[from_lab[static_cast<size_t>(p)]] = to_lab[static_cast<size_t>(p)];
        gens.push_back(g);
    }

    void leaf(const Part& part) {
        std::array<uint8_t, kMaxOrder> lab{};
        for (int p = 0; p < n; ++p) lab[static_cast<size_t>(p)] = part.order[static_cast<size_t>(p)];
        std::array<uint64_t, kMaxOrder> rel{};
        relabel(lab, rel);
        if (!have_first) {
            have_first = have_best = true;
            first_lab = best_lab = lab;
            first_rows = best_rows = rel;
            std::copy(path.begin(), path.begin() + path_len, first_path.begin());
            first_path_len = path_len;
            best_path = first_path;
            best_path_len = path_len;
            return;
        }
        if (cmp_rows(rel, first_rows, n) == 0) {
            record_gen(first_lab, lab);
            jump_to = common_prefix(path, path_len, first_path, first_path_len);
            return;
        }
        int c = cmp_rows(rel, best_rows, n);
        if (c == 0) {
            record_gen(best_lab, lab);
            jump_to = common_prefix(path, path_len, best_path, best_path_len);
            return;
        }
        if (c < 0) {
            best_lab = lab;
            best_rows = rel;
            std::copy(path.begin(), path.begin() + path_len, best_path.begin());
            best_path_len = path_len;
        }
    }

    // orbit of u under the subgroup generated by prefix-fixing generators;
    // returns true when it meets `explored`
    bool equivalent_to_explored(int u, const uint8_t* explored, int explored_len) {
        if (gens.empty() || explored_len == 0) return false;
        const Perm* fixing[64];
        int nfix = 0;
        for (const Perm& g : gens) {
            bool ok = true;
            for (int i = 0; i < path_len; ++i)
                if (g[path[static_cast<size_t>(i)]] != path[static_cast<size_t>(i)]) {
                    ok = false;
                    break;
                }
            if (ok && nfix < 64) fixing[nfix++] = &g;
        }
        if (nfix == 0) return false;
        uint64_t exp_mask = 0;
        for (int i = 0; i < explored_len; ++i) exp_mask |= vbit(explored[i]);
        uint64_t seen = vbit(u);
        uint64_t frontier = seen;
        while (frontier) {
            uint64_t next = 0;
            for_each_bit(frontier, [&](int v) {
                for (int i = 0; i < nfix; ++i) next |= vbit((*fixing[i])[static_cast<size_t>(v)]);
            });
            next &= ~seen;
            if (next & exp_mask) return true;
            seen |= next;
            frontier = next;
        }
        return false;
    }

    void descend(Part part, bool refined) {
        if (!refined) refine(adj, part);
        // locate first non-singleton cell
        int cs = -1;
        for (int s = 0; s < n; s += part.len[static_cast<size_t>(s)]) {
            if (part.len[static_cast<size_t>(s)] > 1) {
                cs = s;
                break;
            }
        }
        if (cs < 0) {
            leaf(part);
            return;
        }
        int cl = part.len[static_cast<size_t>(cs)];
        uint8_t members[kMaxOrder];
        std::memcpy(members, &part.order[static_cast<size_t>(cs)], static_cast<size_t>(cl));
        uint8_t explored[kMaxOrder];
        int explored_len = 0;
        for (int i = 0; i < cl; ++i) {
            int u = members[i];
            if (equivalent_to_explored(u, explored, explored_len)) continue;
            explored[explored_len++] = static_cast<uint8_t>(u);
            Part child = part;
            // split cell into [u][rest], preserving order of the rest
            child.order[static_cast<size_t>(cs)] = static_cast<uint8_t>(u);
            int w = cs + 1;
            for (int j = 0; j < cl; ++j)
                if (members[j] != u) child.order[static_cast<size_t>(w++)] = members[j];
            child.len[static_cast<size_t>(cs)] = 1;
            child.cmask[static_cast<size_t>(cs)] = vbit(u);
            child.len[static_cast<size_t>(cs + 1)] = static_cast<uint8_t>(cl - 1);
            child.cmask[static_cast<size_t>(cs + 1)] = part.cmask[static_cast<size_t>(cs)] & ~vbit(u);
            path[static_cast<size_t>(path_len++)] = static_cast<uint8_t>(u);
            descend(child, false);
            --path_len;
            if (jump_to >= 0) {
                if (path_len > jump_to) return;
                jump_to = -1;
            }
        }
    }
};

// root may be pre-refined (pass refined=true) to share work with callers
// that already ran the refinement
inline void canon_search_rooted(const uint64_t* adj, int n, Part root, bool refined, CanonOut& out) {
    CanonSearch s;
    s.adj = adj;
    s.n = n;
    s.descend(std::move(root), refined);
    out.lab = s.best_lab;
    for (int q = 0; q < n; ++q) out.pos[s.best_lab[static_cast<size_t>(q)]] = static_cast<uint8_t>(q);
    out.canon_rows = s.best_rows;
    out.gens = std::move(s.gens);
    // orbits: union-find closure over the generators
    std::array<uint8_t, kMaxOrder> parent{};
    for (int v = 0; v < n; ++v) parent[static_cast<size_t>(v)] = static_cast<uint8_t>(v);
    auto find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[parent[static_cast<size_t>(v)]];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    };
    for (const Perm& g : out.gens) {
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(g[static_cast<size_t>(v)]);
            if (a != b) parent[static_cast<size_t>(std::max(a, b))] = static_cast<uint8_t>(std::min(a, b));
        }
    }
    for (int v = 0; v < n; ++v) out.orbit[static_cast<size_t>(v)] = static_cast<uint8_t>(find(v));
}

inline void canon_search(const uint64_t* adj, int n, CanonOut& out) {
    Part p;
    p.init_unit(n);
    canon_search_rooted(adj, n, std::move(p), false, out);
}

}  // namespace detail

struct CanonResult {
    std::string g6;                       // canonical form: equal iff isomorphic
    std::vector<int> canonical_order;     // canonical_order[pos] = original vertex
    std::vector<std::vector<int>> generators;
    std::vector<int> orbit;               // orbit representative per vertex
};

inline CanonResult canonical_label(const Graph& g) {
    detail::CanonOut out;
    detail::canon_search(g.rows().data(), g.order(), out);
    CanonResult r;
    int n = g.order();
    r.g6 = to_graph6(graph_from_rows(n, out.canon_rows.data()));
    r.canonical_order.assign(out.lab.begin(), out.lab.begin() + n);
    for (const auto& gen : out.gens)
        r.generators.emplace_back(gen.begin(), gen.begin() + n);
    r.orbit.assign(out.orbit.begin(), out.orbit.begin() + n);
    return r;
}

inline std::string canonical_form(const Graph& g) {
    detail::CanonOut out;
    detail::canon_search(g.rows().data(), g.order(), out);
    return to_graph6(graph_from_rows(g.order(), out.canon_rows.data()));
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

// ---- isomorph-free generation -------------------------------------------

inline constexpr int kMaxEnumOrder = 16;

struct GenSpec {
    int order = 1;
    std::optional<int> regular_degree;
    std::optional<std::pair<int, int>> size_range;  // inclusive edge-count window
    std::optional<int> min_degree;
    std::optional<int> max_degree;
    bool connected = true;
};

namespace detail {

struct EnumEngine {
    int n = 0;
    int e_min = 0, e_max = 0;
    int cap = 0;  // per-vertex degree cap
    std::optional<int> kreg;
    int mind = 0;
    bool need_conn = true;

    const std::function<void(const Graph&)>* sink = nullptr;
    int collect_level = -1;  // when >= 0, emit level-k row snapshots instead of recursing past
    std::vector<std::array<uint64_t, kMaxEnumOrder>>* collected = nullptr;

    uint64_t rows[kMaxEnumOrder] = {};
    int deg[kMaxEnumOrder] = {};
    int edges = 0;
    std::vector<uint64_t> orbit_scratch;

    static int comp_count(const uint64_t* rows, int k) {
        uint64_t left = low_bits(k);
        int c = 0;
        while (left) {
            uint64_t comp = vbit(std::countr_zero(left));
            uint64_t frontier = comp;
            while (frontier) {
                uint64_t next = 0;
                for_each_bit(frontier, [&](int v) { next |= rows[v]; });
                next &= left & ~comp;
                comp |= next;
                frontier = next;
            }
            left &= ~comp;
            ++c;
        }
        return c;
    }

    void emit_final() {
        if (edges < e_min || edges > e_max) return;
        for (int v = 0; v < n; ++v) {
            if (deg[v] < mind) return;
            if (kreg && deg[v] != *kreg) return;
        }
        if (need_conn && comp_count(rows, n) != 1) return;
        (*sink)(graph_from_rows(n, rows));
    }

    // child accept test: is the new vertex (index k, order k+1) in the orbit
    // of the canonically deleted vertex?
    bool accept_child(int kk) {
        int x = kk - 1;
        int dmin = deg[0];
        for (int v = 1; v < kk; ++v) dmin = std::min(dmin, deg[v]);
        if (deg[x] > dmin) return false;
        uint64_t m1 = 0;
        for (int v = 0; v < kk; ++v)
            if (deg[v] == dmin) m1 |= vbit(v);
        if (m1 == vbit(x)) return true;

        // second invariant: packed sorted neighbor degrees
        auto nbr_key = [&](int v) {
            uint64_t nb = rows[v];
            int ds[kMaxEnumOrder];
            int c = 0;
            while (nb) {
                ds[c++] = deg[std::countr_zero(nb)];
                nb &= nb - 1;
            }
            std::sort(ds, ds + c);
            uint64_t key = 0;
            for (int i = 0; i < c; ++i) key |= static_cast<uint64_t>(ds[i]) << (4 * i);
            return key;
        };
        uint64_t kx = nbr_key(x);
        uint64_t m2 = 0;
        uint64_t kmin = ~uint64_t{0};
        for_each_bit(m1, [&](int v) {
            uint64_t kv = (v == x) ? kx : nbr_key(v);
            if (kv < kmin) {
                kmin = kv;
                m2 = vbit(v);
            } else if (kv == kmin) {
                m2 |= vbit(v);
            }
        });
        if (!(m2 & vbit(x))) return false;
        if (m2 == vbit(x)) return true;

        CanonOut out;
        canon_search(rows, kk, out);
        int wstar = -1, wpos = kMaxOrder;
        for_each_bit(m2, [&](int v) {
            if (out.pos[static_cast<size_t>(v)] < wpos) {
                wpos = out.pos[static_cast<size_t>(v)];
                wstar = v;
            }
        });
        return out.orbit[static_cast<size_t>(x)] == out.orbit[static_cast<size_t>(wstar)];
    }

    void expand(int k) {
        if (k == collect_level) {
            std::array<uint64_t, kMaxEnumOrder> snap{};
            std::copy(rows, rows + k, snap.begin());
            collected->push_back(snap);
            return;
        }
        if (k == n) {
            emit_final();
            return;
        }
        int c = comp_count(rows, k);
        if (need_conn && edges + (c - 1) + (n - k) > e_max) return;
        if (!need_conn && edges > e_max) return;
        {
            long max_add = 0;
            for (int j = k; j < n; ++j) max_add += std::min(j, cap);
            if (edges + max_add < e_min) return;
        }
        for (int v = 0; v < k; ++v) {
            if (deg[v] + (n - k) < mind) return;
            if (kreg && (deg[v] > *kreg || deg[v] + (n - k) < *kreg)) return;
        }

        uint64_t allowed = 0;
        for (int v = 0; v < k; ++v)
            if (deg[v] < cap) allowed |= vbit(v);
        int A = popcount(allowed);
        int av[kMaxEnumOrder];
        {
            int i = 0;
            for_each_bit(allowed, [&](int v) { av[i++] = v; });
        }
        int d_hi = std::min(std::min(A, cap), e_max - edges);
        int d_lo = 0;
        uint64_t comp_masks[kMaxEnumOrder];
        int n_comps = 0;
        bool last = (k == n - 1);
        if (last) {
            d_lo = std::max(d_lo, e_min - edges);
            d_lo = std::max(d_lo, mind);
            if (kreg) {
                if (*kreg < d_lo || *kreg > d_hi) return;
                d_lo = d_hi = *kreg;
            }
            if (need_conn) {
                d_lo = std::max(d_lo, c);
                uint64_t left = low_bits(k);
                while (left) {
                    uint64_t comp = vbit(std::countr_zero(left));
                    uint64_t frontier = comp;
                    while (frontier) {
                        uint64_t next = 0;
                        for_each_bit(frontier, [&](int v) { next |= rows[v]; });
                        next &= left & ~comp;
                        comp |= next;
                        frontier = next;
                    }
                    comp_masks[n_comps++] = comp;
                    left &= ~comp;
                }
            }
        }
        if (d_lo > d_hi) return;

        // parent-side: one representative per Aut(parent)-orbit of neighborhoods
        std::vector<Perm> pgens;
        uint64_t pmoved = 0;
        if (k >= 2) {
            Part p;
            p.init_unit(k);
            refine(rows, p);
            if (!p.discrete() && !pair_cell_gens(k, p, pgens)) {
                CanonOut pout;
                canon_search_rooted(rows, k, std::move(p), true, pout);
                pgens = std::move(pout.gens);
            }
            for (const Perm& g : pgens)
                for (int v = 0; v < k; ++v)
                    if (g[static_cast<size_t>(v)] != v) pmoved |= vbit(v);
        }

        for (int d = d_lo; d <= d_hi; ++d) {
            int idx[kMaxEnumOrder];
            for (int i = 0; i < d; ++i) idx[i] = i;
            bool more = (d <= A);
            if (d == 0) {
                try_subset(0, k, last, comp_masks, n_comps, pgens, pmoved);
                continue;
            }
            while (more) {
                uint64_t S = 0;
                for (int i = 0; i < d; ++i) S |= vbit(av[idx[i]]);
                try_subset(S, k, last, comp_masks, n_comps, pgens, pmoved);
                // next combination
                int i = d - 1;
                while (i >= 0 && idx[i] == A - d + i) --i;
                if (i < 0) {
                    more = false;
                } else {
                    ++idx[i];
                    for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
                }
            }
        }
    }

    // When every non-singleton refinement cell is a pair, Aut is the GF(2)
    // subspace of valid twin-swap combinations; enumerate it directly and
    // return a basis. Much cheaper than a full canonical search.
    bool pair_cell_gens(int k, const Part& p, std::vector<Perm>& out) {
        int pa[4], pb[4], t = 0;
        for (int s = 0; s < k; s += p.len[static_cast<size_t>(s)]) {
            int l = p.len[static_cast<size_t>(s)];
            if (l == 1) continue;
            if (l != 2 || t == 4) return false;
            pa[t] = p.order[static_cast<size_t>(s)];
            pb[t] = p.order[static_cast<size_t>(s + 1)];
            ++t;
        }
        auto swap_bits = [](uint64_t m, int a, int b) {
            uint64_t x = ((m >> a) ^ (m >> b)) & 1;
            return m ^ ((x << a) | (x << b));
        };
        uint32_t valid[16];
        int nvalid = 0;
        for (uint32_t m = 1; m < (1u << t); ++m) {
            bool ok = true;
            for (int v = 0; v < k && ok; ++v) {
                uint64_t row = rows[v];
                int iv = v;
                for (int i = 0; i < t; ++i)
                    if (m >> i & 1) {
                        row = swap_bits(row, pa[i], pb[i]);
                        if (iv == pa[i])
                            iv = pb[i];
                        else if (iv == pb[i])
                            iv = pa[i];
                    }
                if (row != rows[iv]) ok = false;
            }
            if (ok) valid[nvalid++] = m;
        }
        // GF(2) basis of the valid swap sets (the set is a subgroup, so any
        // reduced element is itself a valid swap combination)
        uint32_t bybit[4] = {0, 0, 0, 0};
        for (int i = 0; i < nvalid; ++i) {
            uint32_t x = valid[i];
            for (int b = t - 1; b >= 0 && x; --b) {
                if (!(x >> b & 1)) continue;
                if (bybit[b]) {
                    x ^= bybit[b];
                } else {
                    bybit[b] = x;
                    x = 0;
                }
            }
        }
        for (int b = 0; b < t; ++b) {
            if (!bybit[b]) continue;
            Perm g{};
            for (int v = 0; v < k; ++v) g[static_cast<size_t>(v)] = static_cast<uint8_t>(v);
            for (int i = 0; i < t; ++i)
                if (bybit[b] >> i & 1) {
                    g[static_cast<size_t>(pa[i])] = static_cast<uint8_t>(pb[i]);
                    g[static_cast<size_t>(pb[i])] = static_cast<uint8_t>(pa[i]);
                }
            out.push_back(g);
        }
        return true;
    }

    // the representative of an orbit is its numerically least member
    bool is_orbit_min(uint64_t S, const std::vector<Perm>& pgens) {
        orbit_scratch.clear();
        orbit_scratch.push_back(S);
        for (size_t i = 0; i < orbit_scratch.size(); ++i) {
            uint64_t t = orbit_scratch[i];
            for (const Perm& g : pgens) {
                uint64_t img = 0;
                uint64_t tt = t;
                while (tt) {
                    img |= vbit(g[static_cast<size_t>(std::countr_zero(tt))]);
                    tt &= tt - 1;
                }
                if (img < S) return false;
                if (std::find(orbit_scratch.begin(), orbit_scratch.end(), img) == orbit_scratch.end())
                    orbit_scratch.push_back(img);
            }
        }
        return true;
    }

    void try_subset(uint64_t S, int k, bool last, const uint64_t* comp_masks, int n_comps,
                    const std::vector<Perm>& pgens, uint64_t pmoved) {
        if (last && need_conn) {
            for (int i = 0; i < n_comps; ++i)
                if (!(S & comp_masks[i])) return;
        }
        int d = popcount(S);
        // the new vertex must minimize degree in the child, so any untouched
        // vertex of smaller degree rules the subset out immediately
        for (int v = 0; v < k; ++v)
            if (deg[v] + ((S >> v) & 1) < d) return;
        if (!pgens.empty() && (S & pmoved) && !is_orbit_min(S, pgens)) return;
        rows[k] = S;
        deg[k] = d;
        for_each_bit(S, [&](int v) {
            rows[v] |= vbit(k);
            ++deg[v];
        });
        edges += d;
        if (accept_child(k + 1)) expand(k + 1);
        edges -= d;
        for_each_bit(S, [&](int v) {
            rows[v] &= ~vbit(k);
            --deg[v];
        });
        rows[k] = 0;
        deg[k] = 0;
    }
};

inline void validate_spec(const GenSpec& spec) {
    if (spec.order < 1 || spec.order > kMaxEnumOrder)
        throw std::invalid_argument("enumeration supports orders 1.." + std::to_string(kMaxEnumOrder));
    if (spec.regular_degree) {
        int k = *spec.regular_degree;
        if (k < 0 || k >= spec.order)
            throw std::invalid_argument("regular degree must be in [0, order)");
        if ((spec.order * k) % 2 != 0)
            throw std::invalid_argument("inconsistent spec: order * degree is odd");
    }
    if (spec.size_range) {
        auto [lo, hi] = *spec.size_range;
        if (lo > hi || lo < 0) throw std::invalid_argument("inconsistent size range");
    }
    if (spec.min_degree && spec.max_degree && *spec.min_degree > *spec.max_degree)
        throw std::invalid_argument("inconsistent spec: min_degree > max_degree");
    if (spec.regular_degree && spec.min_degree && *spec.min_degree > *spec.regular_degree)
        throw std::invalid_argument("inconsistent spec: min_degree > regular degree");
}

inline EnumEngine make_engine(const GenSpec& spec) {
    validate_spec(spec);
    EnumEngine e;
    e.n = spec.order;
    int max_edges = spec.order * (spec.order - 1) / 2;
    e.e_min = 0;
    e.e_max = max_edges;
    if (spec.size_range) {
        e.e_min = std::max(e.e_min, spec.size_range->first);
        e.e_max = std::min(e.e_max, spec.size_range->second);
    }
    e.cap = spec.order - 1;
    if (spec.max_degree) e.cap = std::min(e.cap, *spec.max_degree);
    if (spec.regular_degree) {
        e.kreg = *spec.regular_degree;
        e.cap = std::min(e.cap, *spec.regular_degree);
        int r = spec.order * *spec.regular_degree / 2;
        e.e_min = std::max(e.e_min, r);
        e.e_max = std::min(e.e_max, r);
    }
    e.mind = spec.min_degree.value_or(0);
    e.need_conn = spec.connected;
    if (spec.connected) e.e_min = std::max(e.e_min, spec.order - 1);
    return e;
}

}  // namespace detail

// Sequential enumeration in deterministic DFS order.
inline void enumerate(const GenSpec& spec, const std::function<void(const Graph&)>& visit) {
    detail::EnumEngine e = detail::make_engine(spec);
    if (e.e_min > e.e_max) return;
    e.sink = &visit;
    if (spec.order == 1) {
        e.emit_final();
        return;
    }
    e.expand(1);
}

namespace detail {

// Splits the search tree at a fixed level and processes subtrees on worker
// threads; fold(root_index) order makes results independent of `jobs`.
template <class Accum>
inline std::vector<Accum> enumerate_partitioned(const GenSpec& spec, int jobs,
                                                const std::function<void(Accum&, const Graph&)>& handle) {
    int split = std::min(spec.order - 1, 8);
    std::vector<Accum> out;
    if (jobs < 2 || split < 2) {
        out.emplace_back();
        std::function<void(const Graph&)> sink = [&](const Graph& g) { handle(out[0], g); };
        enumerate(spec, sink);
        return out;
    }
    EnumEngine probe = make_engine(spec);
    if (probe.e_min > probe.e_max) return out;
    std::vector<std::array<uint64_t, kMaxEnumOrder>> roots;
    probe.collect_level = split;
    probe.collected = &roots;
    probe.expand(1);
    out.resize(roots.size());
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w]() {
            for (size_t i = static_cast<size_t>(w); i < roots.size(); i += static_cast<size_t>(jobs)) {
                EnumEngine e = make_engine(spec);
                std::function<void(const Graph&)> sink = [&](const Graph& g) { handle(out[i], g); };
                e.sink = &sink;
                for (int v = 0; v < split; ++v) {
                    e.rows[v] = roots[i][static_cast<size_t>(v)];
                    e.deg[v] = popcount(e.rows[v]);
                    e.edges += e.deg[v];
                }
                e.edges /= 2;
                e.expand(split);
            }
        });
    }
    for (auto& t : workers) t.join();
    return out;
}

}  // namespace detail

inline uint64_t count_classes(const GenSpec& spec, int jobs = 1) {
    auto parts = detail::enumerate_partitioned<uint64_t>(
        spec, jobs, [](uint64_t& acc, const Graph&) { ++acc; });
    uint64_t total = 0;
    for (uint64_t c : parts) total += c;
    return total;
}

// All classes as canonical graph6, sorted; the exported stream format.
inline std::vector<std::string> enumerate_collect(const GenSpec& spec, int jobs = 1) {
    auto parts = detail::enumerate_partitioned<std::vector<std::string>>(
        spec, jobs,
        [](std::vector<std::string>& acc, const Graph& g) { acc.push_back(canonical_form(g)); });
    std::vector<std::string> all;
    for (auto& p : parts)
        all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    std::sort(all.begin(), all.end());
    return all;
}

enum class Objective { maximize, minimize };

struct ScanResult {
    std::string statistic;
    std::optional<long> extremal;          // empty when no graph passed the filter
    uint64_t attaining_count = 0;
    std::vector<std::string> certificates; // canonical g6, sorted, capped
    bool truncated = false;
    uint64_t visited = 0;
};

inline ScanResult scan(const GenSpec& spec, const std::function<bool(const Graph&)>& filter,
                       const std::function<long(const Graph&)>& statistic, Objective objective,
                       const std::string& statistic_name = "stat", int cert_cap = 1000,
                       int jobs = 1) {
    struct Accum {
        std::optional<long> best;
        uint64_t count = 0;
        std::vector<std::string> certs;  // sorted, capped at cert_cap
        uint64_t visited = 0;
    };
    if (cert_cap < 0) cert_cap = 0;
    size_t cap = static_cast<size_t>(cert_cap);
    bool maximize = objective == Objective::maximize;
    // each part keeps the lexicographically least certificates, so the merged
    // result is independent of how the search tree was partitioned
    auto add_cert = [cap](std::vector<std::string>& certs, std::string s) {
        if (cap == 0) return;
        auto it = std::lower_bound(certs.begin(), certs.end(), s);
        if (certs.size() == cap) {
            if (it == certs.end()) return;
            certs.pop_back();
            it = std::lower_bound(certs.begin(), certs.end(), s);
        }
        certs.insert(it, std::move(s));
    };
    auto parts = detail::enumerate_partitioned<Accum>(
        spec, jobs, [&](Accum& a, const Graph& g) {
            ++a.visited;
            if (!filter(g)) return;
            long v = statistic(g);
            if (!a.best || (maximize ? v > *a.best : v < *a.best)) {
                a.best = v;
                a.count = 0;
                a.certs.clear();
            }
            if (*a.best == v) {
                ++a.count;
                add_cert(a.certs, canonical_form(g));
            }
        });
    ScanResult r;
    r.statistic = statistic_name;
    for (auto& a : parts) {
        r.visited += a.visited;
        if (!a.best) continue;
        if (!r.extremal || (maximize ? *a.best > *r.extremal : *a.best < *r.extremal)) {
            r.extremal = a.best;
            r.attaining_count = 0;
            r.certificates.clear();
        }
        if (*r.extremal == *a.best) {
            r.attaining_count += a.count;
            for (auto& c : a.certs) add_cert(r.certificates, std::move(c));
        }
    }
    r.truncated = r.attaining_count > r.certificates.size();
    return r;
}

}  // namespace ascgraph
