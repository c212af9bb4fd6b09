#pragma once
// Immutable simple graphs on up to 64 vertices. Adjacency is one 64-bit
// mask per vertex, which keeps BFS, set operations and the enumeration
// engine allocation-free.

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ascgraph {

inline constexpr int kMaxOrder = 64;

inline constexpr uint64_t vbit(int v) { return uint64_t{1} << v; }

inline constexpr uint64_t low_bits(int n) {
    return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

inline int popcount(uint64_t x) { return std::popcount(x); }

template <class F>
inline void for_each_bit(uint64_t m, F f) {
    while (m) {
        f(std::countr_zero(m));
        m &= m - 1;
    }
}

// Set of vertices of some fixed graph, stored as a bit mask.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(uint64_t bits) : bits_(bits) {}

    static VertexSet single(int v) { return VertexSet(vbit(v)); }

    bool contains(int v) const { return (bits_ >> v) & 1; }
    void add(int v) { bits_ |= vbit(v); }
    void remove(int v) { bits_ &= ~vbit(v); }
    int count() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    uint64_t bits() const { return bits_; }

    bool operator==(const VertexSet&) const = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for_each_bit(bits_, [&](int v) { out.push_back(v); });
        return out;
    }

private:
    uint64_t bits_ = 0;
};

class GraphBuilder;

// Immutable value type; every operation below returns a new graph.
class Graph {
public:
    int order() const { return n_; }
    int size() const { return m_; }

    bool adjacent(int u, int v) const { return (adj_[static_cast<size_t>(u)] >> v) & 1; }
    uint64_t neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return std::popcount(adj_[static_cast<size_t>(v)]); }
    uint64_t vertex_mask() const { return low_bits(n_); }

    const std::array<uint64_t, kMaxOrder>& rows() const { return adj_; }

    bool operator==(const Graph& o) const {
        if (n_ != o.n_ || m_ != o.m_) return false;
        for (int v = 0; v < n_; ++v)
            if (adj_[static_cast<size_t>(v)] != o.adj_[static_cast<size_t>(v)]) return false;
        return true;
    }

private:
    friend class GraphBuilder;
    friend Graph graph_from_rows(int n, const uint64_t* rows);

    Graph() = default;

    int n_ = 0;
    int m_ = 0;
    std::array<uint64_t, kMaxOrder> adj_{};
};

// Fast path for the enumeration engine; rows must already be symmetric,
// loop-free and confined to the low n bits.
inline Graph graph_from_rows(int n, const uint64_t* rows) {
    assert(n >= 1 && n <= kMaxOrder);
    Graph g;
    g.n_ = n;
    int total = 0;
    for (int v = 0; v < n; ++v) {
        assert((rows[v] & ~low_bits(n)) == 0);
        assert(((rows[v] >> v) & 1) == 0);
        g.adj_[static_cast<size_t>(v)] = rows[v];
        total += std::popcount(rows[v]);
    }
    g.m_ = total / 2;
    return g;
}

class GraphBuilder {
public:
    explicit GraphBuilder(int n) : n_(n) {
        if (n < 1 || n > kMaxOrder)
            throw std::invalid_argument("graph order must be in [1, " +
                                        std::to_string(kMaxOrder) + "], got " + std::to_string(n));
        adj_.fill(0);
    }

    int order() const { return n_; }

    GraphBuilder& add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loops are not allowed");
        adj_[static_cast<size_t>(u)] |= vbit(v);
        adj_[static_cast<size_t>(v)] |= vbit(u);
        return *this;
    }

    bool has_edge(int u, int v) const { return (adj_[static_cast<size_t>(u)] >> v) & 1; }

    Graph build() const {
        Graph g;
        g.n_ = n_;
        g.adj_ = adj_;
        int total = 0;
        for (int v = 0; v < n_; ++v) {
            assert((adj_[static_cast<size_t>(v)] & ~low_bits(n_)) == 0);
            assert(((adj_[static_cast<size_t>(v)] >> v) & 1) == 0);
            total += std::popcount(adj_[static_cast<size_t>(v)]);
        }
        g.m_ = total / 2;
        return g;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                        std::to_string(n_) + ")");
    }

    int n_;
    std::array<uint64_t, kMaxOrder> adj_{};
};

inline Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

// ---- construction primitives ------------------------------------------

inline Graph complement(const Graph& g) {
    int n = g.order();
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) b.add_edge(u, v);
    return b.build();
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
    int n = g.order() + h.order();
    if (n > kMaxOrder)
        throw std::invalid_argument("disjoint union exceeds supported order " +
                                    std::to_string(kMaxOrder));
    GraphBuilder b(n);
    for (int u = 0; u < g.order(); ++u)
        for_each_bit(g.neighbors(u), [&](int v) {
            if (v > u) b.add_edge(u, v);
        });
    int off = g.order();
    for (int u = 0; u < h.order(); ++u)
        for_each_bit(h.neighbors(u), [&](int v) {
            if (v > u) b.add_edge(u + off, v + off);
        });
    return b.build();
}

// New vertex of degree 1 adjacent only to v.
inline Graph attach_pendant(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("attach_pendant: vertex out of range");
    int n = g.order() + 1;
    if (n > kMaxOrder) throw std::invalid_argument("attach_pendant exceeds supported order");
    GraphBuilder b(n);
    for (int u = 0; u < g.order(); ++u)
        for_each_bit(g.neighbors(u), [&](int w) {
            if (w > u) b.add_edge(u, w);
        });
    b.add_edge(v, n - 1);
    return b.build();
}

// New vertex x with N(x) = N(v); x and v stay nonadjacent.
inline Graph duplicate_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("duplicate_vertex: vertex out of range");
    int n = g.order() + 1;
    if (n > kMaxOrder) throw std::invalid_argument("duplicate_vertex exceeds supported order");
    GraphBuilder b(n);
    for (int u = 0; u < g.order(); ++u)
        for_each_bit(g.neighbors(u), [&](int w) {
            if (w > u) b.add_edge(u, w);
        });
    for_each_bit(g.neighbors(v), [&](int w) { b.add_edge(n - 1, w); });
    return b.build();
}

// Replace v by K_t, joining every clique vertex to each old neighbor of v.
// The clique reuses v's slot plus t-1 fresh vertices, so blow_up(g, v, 1) is
// g itself up to the identity relabeling.
inline Graph blow_up(const Graph& g, int v, int t) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("blow_up: vertex out of range");
    if (t < 1) throw std::invalid_argument("blow_up: t must be positive");
    int n = g.order() - 1 + t;
    if (n > kMaxOrder) throw std::invalid_argument("blow_up exceeds supported order");
    GraphBuilder b(n);
    for (int u = 0; u < g.order(); ++u)
        for_each_bit(g.neighbors(u), [&](int w) {
            if (w > u) b.add_edge(u, w);
        });
    uint64_t nv = g.neighbors(v);
    for (int i = 0; i < t - 1; ++i) {
        int x = g.order() + i;
        for_each_bit(nv, [&](int w) { b.add_edge(x, w); });
        b.add_edge(x, v);
        for (int j = 0; j < i; ++j) b.add_edge(x, g.order() + j);
    }
    return b.build();
}

// ---- graph6 (short form, headerless) ------------------------------------

class graph6_error : public std::runtime_error {
public:
    graph6_error(const std::string& what, size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

inline Graph from_graph6(std::string_view text) {
    if (text.empty()) throw graph6_error("empty graph6 string", 0);
    unsigned char c0 = static_cast<unsigned char>(text[0]);
    if (c0 == 126) throw graph6_error("long-form graph6 is not supported", 0);
    if (c0 < 63 || c0 > 125) throw graph6_error("invalid order byte", 0);
    int n = static_cast<int>(c0) - 63;
    if (n < 1) throw graph6_error("graph6 order must be at least 1", 0);
    int nbits = n * (n - 1) / 2;
    size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
    if (text.size() < 1 + nbytes) throw graph6_error("graph6 string too short", text.size());
    if (text.size() > 1 + nbytes) throw graph6_error("trailing bytes after graph6 data", 1 + nbytes);

    GraphBuilder b(n);
    int k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            size_t byte = 1 + static_cast<size_t>(k / 6);
            unsigned char c = static_cast<unsigned char>(text[byte]);
            if (c < 63 || c > 126) throw graph6_error("invalid graph6 data byte", byte);
            if ((c - 63) >> (5 - k % 6) & 1) b.add_edge(i, j);
        }
    }
    // padding bits of the last byte must be zero
    for (int p = nbits; p < static_cast<int>(nbytes) * 6; ++p) {
        size_t byte = 1 + static_cast<size_t>(p / 6);
        unsigned char c = static_cast<unsigned char>(text[byte]);
        if (c < 63 || c > 126) throw graph6_error("invalid graph6 data byte", byte);
        if ((c - 63) >> (5 - p % 6) & 1) throw graph6_error("nonzero graph6 padding bits", byte);
    }
    return b.build();
}

inline std::string to_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6 short form supports order <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return out;
}

// Human inspection only; not round-tripped.
inline std::string to_dot(const Graph& g) {
    std::string out = "graph g {\n";
    for (int v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
    for (int u = 0; u < g.order(); ++u)
        for_each_bit(g.neighbors(u), [&](int v) {
            if (v > u) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
        });
    out += "}\n";
    return out;
}

}  // namespace ascgraph
