#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "ascgraph/construct.hpp"
#include "ascgraph/enumerate.hpp"

using namespace ascgraph;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    GraphBuilder b(g.order());
    for (int u = 0; u < g.order(); ++u)
        for_each_bit(g.neighbors(u), [&](int v) {
            if (v > u) b.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
        });
    return b.build();
}

// all automorphisms by brute force over the symmetric group (n <= 7)
std::vector<std::vector<int>> oracle_automorphisms(const Graph& g) {
    std::vector<int> perm(static_cast<size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> autos;
    do {
        bool ok = true;
        for (int u = 0; u < g.order() && ok; ++u)
            for (int v = u + 1; v < g.order() && ok; ++v)
                if (g.adjacent(u, v) !=
                    g.adjacent(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]))
                    ok = false;
        if (ok) autos.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return autos;
}

std::vector<int> oracle_orbits(const Graph& g) {
    auto autos = oracle_automorphisms(g);
    std::vector<int> rep(static_cast<size_t>(g.order()));
    std::iota(rep.begin(), rep.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (rep[static_cast<size_t>(v)] != v) v = rep[static_cast<size_t>(v)] = rep[static_cast<size_t>(rep[static_cast<size_t>(v)])];
        return v;
    };
    for (const auto& a : autos)
        for (int v = 0; v < g.order(); ++v) {
            int x = find(v), y = find(a[static_cast<size_t>(v)]);
            if (x != y) rep[static_cast<size_t>(std::max(x, y))] = std::min(x, y);
        }
    std::vector<int> out(static_cast<size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) out[static_cast<size_t>(v)] = find(v);
    return out;
}

// labeled brute force: all 2^(n choose 2) graphs, canonical dedup
uint64_t oracle_connected_count(int n) {
    int m = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> slots;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
    std::unordered_set<std::string> classes;
    for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
        GraphBuilder b(n);
        for (int s = 0; s < m; ++s)
            if (mask >> s & 1) b.add_edge(slots[static_cast<size_t>(s)].first, slots[static_cast<size_t>(s)].second);
        Graph g = b.build();
        if (!is_connected(g)) continue;
        classes.insert(canonical_form(g));
    }
    return classes.size();
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(31);
    std::vector<Graph> samples = {cycle(5),      path(4),          theta(1, 2, 4), theta(2, 3, 4),
                                  complete(6),   star(7),          z_graph(10, 3), cycle_pendant(7),
                                  complete_minus_edge(6)};
    for (const auto& g : samples) {
        std::string form = canonical_form(g);
        std::vector<int> perm(static_cast<size_t>(g.order()));
        std::iota(perm.begin(), perm.end(), 0);
        for (int t = 0; t < 30; ++t) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_form(relabel(g, perm)) == form);
        }
        // canonical form is idempotent
        CHECK(canonical_form(from_graph6(form)) == form);
    }
    CHECK(canonical_form(theta(1, 2, 4)) == canonical_form(theta(1, 4, 2)));
    CHECK(canonical_form(path(4)) != canonical_form(star(4)));
}

TEST_CASE("canonical form separates exactly the isomorphism classes") {
    // brute-force cross-validation: forms agree iff a permutation maps one
    // graph onto the other (all graphs on 4 vertices, all pairs)
    std::vector<Graph> all4;
    GenSpec spec;
    spec.order = 4;
    spec.connected = false;
    enumerate(spec, [&](const Graph& g) { all4.push_back(g); });
    CHECK(all4.size() == 11);
    for (const auto& a : all4)
        for (const auto& b : all4) {
            bool iso = false;
            std::vector<int> perm = {0, 1, 2, 3};
            do {
                iso = iso || relabel(a, perm) == b;
            } while (!iso && std::next_permutation(perm.begin(), perm.end()));
            CHECK(iso == (canonical_form(a) == canonical_form(b)));
        }
}

TEST_CASE("automorphism orbits match the brute-force oracle") {
    auto check_orbits = [&](const Graph& g) {
        auto want = oracle_orbits(g);
        auto got = canonical_label(g).orbit;
        // same partition: pairwise equivalence must agree
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v)
                CHECK((want[static_cast<size_t>(u)] == want[static_cast<size_t>(v)]) ==
                      (got[static_cast<size_t>(u)] == got[static_cast<size_t>(v)]));
    };
    for (int n = 2; n <= 6; ++n) {
        GenSpec spec;
        spec.order = n;
        spec.connected = false;
        enumerate(spec, [&](const Graph& g) { check_orbits(g); });
    }
    check_orbits(cycle(7));
    check_orbits(complete(7));
    check_orbits(star(7));
}

TEST_CASE("generator counts match the labeled brute-force oracle") {
    std::vector<uint64_t> pinned = {1, 2, 6, 21, 112};
    for (int n = 2; n <= 6; ++n) {
        GenSpec spec;
        spec.order = n;
        uint64_t stream = count_classes(spec);
        CHECK(stream == oracle_connected_count(n));
        CHECK(stream == pinned[static_cast<size_t>(n - 2)]);
    }
}

TEST_CASE("known class counts") {
    GenSpec s7;
    s7.order = 7;
    CHECK(count_classes(s7) == 853);
    GenSpec r6;
    r6.order = 6;
    r6.regular_degree = 3;
    CHECK(count_classes(r6) == 2);
    GenSpec r8;
    r8.order = 8;
    r8.regular_degree = 3;
    CHECK(count_classes(r8) == 5);
    GenSpec d2;
    d2.order = 2;
    CHECK(count_classes(d2) == 1);
}

TEST_CASE("isomorph-freeness and constraint soundness") {
    for (int n = 4; n <= 7; ++n) {
        GenSpec spec;
        spec.order = n;
        spec.connected = false;
        std::unordered_set<std::string> seen;
        enumerate(spec, [&](const Graph& g) {
            CHECK(g.order() == n);
            CHECK(seen.insert(canonical_form(g)).second);  // no repeats
        });
    }
    GenSpec spec;
    spec.order = 7;
    spec.min_degree = 2;
    spec.size_range = {{8, 9}};
    enumerate(spec, [&](const Graph& g) {
        CHECK(is_connected(g));
        CHECK(degree_stats(g).min_degree >= 2);
        CHECK(g.size() >= 8);
        CHECK(g.size() <= 9);
    });
    GenSpec reg;
    reg.order = 8;
    reg.regular_degree = 4;
    enumerate(reg, [&](const Graph& g) {
        for (int v = 0; v < 8; ++v) CHECK(g.degree(v) == 4);
    });
}

TEST_CASE("sparse-mode soundness") {
    for (int n = 5; n <= 8; ++n) {
        GenSpec full;
        full.order = n;
        std::vector<std::string> filtered;
        enumerate(full, [&](const Graph& g) {
            if (g.size() >= n + 1 && g.size() <= n + 2) filtered.push_back(canonical_form(g));
        });
        std::sort(filtered.begin(), filtered.end());
        GenSpec sparse;
        sparse.order = n;
        sparse.size_range = {{n + 1, n + 2}};
        CHECK(enumerate_collect(sparse) == filtered);
    }
}

TEST_CASE("inconsistent specs are rejected") {
    GenSpec odd;
    odd.order = 5;
    odd.regular_degree = 3;  // 5*3 odd
    CHECK_THROWS_AS(count_classes(odd), std::invalid_argument);
    GenSpec big;
    big.order = 17;
    CHECK_THROWS_AS(count_classes(big), std::invalid_argument);
    GenSpec rng;
    rng.order = 5;
    rng.size_range = {{4, 2}};
    CHECK_THROWS_AS(count_classes(rng), std::invalid_argument);
}

TEST_CASE("determinism across runs and worker counts") {
    GenSpec spec;
    spec.order = 7;
    auto a = enumerate_collect(spec, 1);
    auto b = enumerate_collect(spec, 1);
    auto c = enumerate_collect(spec, 3);
    CHECK(a == b);
    CHECK(a == c);
    CHECK(count_classes(spec, 1) == count_classes(spec, 4));

    auto s1 = scan(
        spec, [](const Graph& g) { return is_asc(g); },
        [](const Graph& g) { return static_cast<long>(independence_number(g)); },
        Objective::maximize, "alpha", 1000, 1);
    auto s2 = scan(
        spec, [](const Graph& g) { return is_asc(g); },
        [](const Graph& g) { return static_cast<long>(independence_number(g)); },
        Objective::maximize, "alpha", 1000, 2);
    CHECK(s1.extremal == s2.extremal);
    CHECK(s1.attaining_count == s2.attaining_count);
    CHECK(s1.certificates == s2.certificates);
    CHECK(s1.visited == s2.visited);
}

TEST_CASE("scan reports no witness on an empty class") {
    GenSpec spec;
    spec.order = 8;
    spec.regular_degree = 3;
    auto res = scan(
        spec, [](const Graph& g) { return is_asc(g); },
        [](const Graph& g) { return static_cast<long>(g.size()); }, Objective::maximize, "size");
    CHECK_FALSE(res.extremal.has_value());
    CHECK(res.attaining_count == 0);
    CHECK(res.certificates.empty());
    CHECK(res.visited == 5);
}

TEST_CASE("certificate cap sets the truncation flag deterministically") {
    GenSpec spec;
    spec.order = 6;
    auto res = scan(
        spec, [](const Graph&) { return true; },
        [](const Graph&) { return 1L; }, Objective::maximize, "const", 10, 1);
    CHECK(res.attaining_count == 112);
    CHECK(res.certificates.size() == 10);
    CHECK(res.truncated);
    auto res2 = scan(
        spec, [](const Graph&) { return true; },
        [](const Graph&) { return 1L; }, Objective::maximize, "const", 10, 3);
    CHECK(res.certificates == res2.certificates);
}
