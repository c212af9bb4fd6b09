// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The full order-10 girth scan (criterion 1) takes minutes and is
// gated behind ASCGRAPH_FULL=1; everything else always runs.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "ascgraph/classify.hpp"
#include "ascgraph/construct.hpp"
#include "ascgraph/enumerate.hpp"
#include "ascgraph/verify.hpp"

using namespace ascgraph;

namespace {

int g_jobs = 1;
uint64_t g_roundtrips = 0;
uint64_t g_roundtrip_failures = 0;

// criterion 10 piggybacks on every graph the suite touches
bool rt(const Graph& g) {
    ++g_roundtrips;
    bool ok = g.order() > 62 || from_graph6(to_graph6(g)) == g;
    if (!ok) ++g_roundtrip_failures;
    return ok;
}

bool report(int criterion, const char* what, bool ok, const std::string& detail = "") {
    std::printf("criterion %2d: %s  %s%s%s\n", criterion, ok ? "PASS" : "FAIL", what,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    return ok;
}

CheckOptions opts() {
    CheckOptions o;
    o.jobs = g_jobs;
    return o;
}

// ---- criterion 1: girth extremals by full enumeration ---------------------

bool criterion1() {
    bool ok = true;
    std::string detail;
    for (int n = 5; n <= 9; ++n) {
        auto r = run_check("thm5", {{"n", n}}, opts());
        ok = ok && r.passed();
        detail += "g(" + std::to_string(n) + ")=" + r.computed["girth"].dump() + " ";
        for (const auto& cert : r.certificates) rt(from_graph6(cert));
    }
    if (std::getenv("ASCGRAPH_FULL")) {
        auto r = run_check("thm5", {{"n", 10}}, opts());
        ok = ok && r.passed();
        detail += "g(10)=" + r.computed["girth"].dump() + " (full order-10 scan)";
    } else {
        detail += "g(10) full scan skipped (set ASCGRAPH_FULL=1)";
    }
    return report(1, "max ASC girth, orders 5..10", ok, detail);
}

// ---- criterion 2: sparse search at orders 12..16 ---------------------------

bool criterion2() {
    bool ok = true;
    std::string detail;
    for (int n : {12, 14, 16}) {
        auto r = run_check("thm5", {{"n", n}}, opts());
        ok = ok && r.passed();
        detail += "g(" + std::to_string(n) + ")=" + r.computed["girth"].dump() + " (x" +
                  r.computed["extremal_count"].dump() + ") ";
    }
    return report(2, "sparse girth search, even orders 12..16", ok, detail);
}

// ---- criterion 3: independence extremals -----------------------------------

bool criterion3() {
    bool ok = true;
    for (int n = 5; n <= 9; ++n)
        for (int rad = 2; 2 * rad + 1 <= n; ++rad) {
            auto r = run_check("thm6", {{"n", n}, {"r", rad}}, opts());
            ok = ok && r.passed();
        }
    for (int n = 5; n <= 9; ++n) {
        auto r = run_check("cor7", {{"n", n}}, opts());
        ok = ok && r.passed() && r.computed["extremal_count"] == 2;
        for (const auto& cert : r.certificates) rt(from_graph6(cert));
    }
    return report(3, "max ASC independence number: n-r per radius, two order-n extremals", ok);
}

// ---- criterion 4: regular ASC graphs ----------------------------------------

// labeled brute force with a degree cap, the independent oracle for the
// specialized cubic generator
uint64_t labeled_cubic_classes(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
    std::unordered_set<std::string> classes;
    std::vector<int> deg(static_cast<size_t>(n), 0);
    GraphBuilder builder(n);
    std::function<void(size_t, Graph&)> dummy;
    std::function<void(size_t, std::vector<std::pair<int, int>>&)> rec =
        [&](size_t idx, std::vector<std::pair<int, int>>& chosen) {
            if (idx == slots.size()) {
                bool cubic = true;
                for (int v = 0; v < n; ++v)
                    if (deg[static_cast<size_t>(v)] != 3) cubic = false;
                if (!cubic) return;
                Graph g = graph_from_edges(n, chosen);
                if (is_connected(g)) classes.insert(canonical_form(g));
                return;
            }
            // prune: a vertex whose remaining slots cannot reach degree 3
            auto [u, v] = slots[idx];
            rec(idx + 1, chosen);
            if (deg[static_cast<size_t>(u)] < 3 && deg[static_cast<size_t>(v)] < 3) {
                ++deg[static_cast<size_t>(u)];
                ++deg[static_cast<size_t>(v)];
                chosen.push_back(slots[idx]);
                rec(idx + 1, chosen);
                chosen.pop_back();
                --deg[static_cast<size_t>(u)];
                --deg[static_cast<size_t>(v)];
            }
        };
    std::vector<std::pair<int, int>> chosen;
    rec(0, chosen);
    return classes.size();
}

bool criterion4() {
    bool ok = true;
    std::string detail;
    auto r3 = run_check("thm8", {{"k", 3}}, opts());
    ok = ok && r3.passed();
    std::map<int, uint64_t> counts;
    for (auto& e : r3.computed["below_minimum"])
        counts[e["order"].get<int>()] = e["classes"].get<uint64_t>();
    ok = ok && counts[8] == 5 && counts[10] == 19 &&
         r3.computed["order12_cubic_classes"] == 85;
    detail = "cubic classes 8/10/12: " + std::to_string(counts[8]) + "/" +
             std::to_string(counts[10]) + "/" + r3.computed["order12_cubic_classes"].dump();
    // cross-check the specialized generator against the labeled oracle
    uint64_t oracle8 = labeled_cubic_classes(8);
    uint64_t oracle6 = labeled_cubic_classes(6);
    ok = ok && oracle8 == counts[8] && oracle6 == 2;
    detail += ", labeled oracle at 8: " + std::to_string(oracle8);

    auto r4 = run_check("thm8", {{"k", 4}}, opts());
    ok = ok && r4.passed();
    for (int k = 5; k <= 12; ++k) {
        auto rk = run_check("thm8", {{"k", k}}, opts());
        ok = ok && rk.passed();
        for (const auto& cert : rk.certificates) rt(from_graph6(cert));
    }
    return report(4, "regular ASC minimum orders (k=3: 12, k>=4: 2k+2)", ok, detail);
}

// ---- criterion 5: AP maximum size -------------------------------------------

bool criterion5() {
    bool ok = true;
    for (int n = 3; n <= 9; ++n) {
        auto r = run_check("thm9", {{"n", n}}, opts());
        ok = ok && r.passed();
        for (const auto& cert : r.certificates) rt(from_graph6(cert));
    }
    for (int n = 3; n <= 30; ++n) {
        Graph g = ap_max_size(n);
        ok = ok && rt(g) && is_ap(g) && g.size() == claims::size_max(n);
    }
    return report(5, "max AP size floor((n-1)^2/2), unique extremal (n<=9), constructor to 30",
                  ok);
}

// ---- criterion 6: AP max-degree spectrum ------------------------------------

bool criterion6() {
    bool ok = true;
    for (int n = 7; n <= 9; ++n) {
        auto r = run_check("thm10", {{"n", n}}, opts());
        ok = ok && r.passed();
    }
    const auto& store = FixtureStore::default_store();
    for (int n = 10; n <= 20; ++n)
        for (int delta = 3; delta <= n - 4; ++delta) {
            Graph g = ap_with_max_degree(n, delta, store);
            ok = ok && rt(g) && is_ap(g) && degree_stats(g).max_degree == delta &&
                 g.order() == n;
        }
    return report(6, "AP max-degree spectrum {3..n-4, n-1}: enumerated 7..9, constructed 7..20",
                  ok);
}

// ---- criterion 7: AP top-vertex extremals ------------------------------------

bool criterion7() {
    bool ok = true;
    for (int n = 8; n <= 9; ++n) {
        auto r = run_check("thm11", {{"n", n}}, opts());
        ok = ok && r.passed() && r.computed["extremal_count"] == 1;
        for (const auto& cert : r.certificates) rt(from_graph6(cert));
    }
    const auto& store = FixtureStore::default_store();
    for (int n = 8; n <= 30; ++n) {
        Graph g = ap_top_extremal(n, store);
        auto st = degree_stats(g);
        ok = ok && rt(g) && is_ap(g) && st.max_degree == n - 4 &&
             static_cast<int>(st.top_vertices.size()) == n - 5;
    }
    return report(7, "AP top-vertex maximum n-5 at max degree n-4, unique at 8..9", ok);
}

// ---- criterion 8: lemma suite -------------------------------------------------

bool criterion8() {
    bool ok = true;
    for (int n = 6; n <= 10; ++n) ok = ok && run_check("lemma1", {{"n", n}}, opts()).passed();
    for (int n = 4; n <= 9; ++n) ok = ok && run_check("lemma2", {{"n", n}}, opts()).passed();
    ok = ok && run_check("lemma3", {{"c_max", 8}}, opts()).passed();
    for (int n = 5; n <= 10; ++n) ok = ok && run_check("lemma4", {{"n", n}}, opts()).passed();
    return report(8, "lemma suite (unicyclic, dichotomy, theta formulas, sparse ASC)", ok);
}

// ---- criterion 9: property suites ---------------------------------------------

uint64_t labeled_connected_classes(int n) {
    int m = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> slots;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
    std::unordered_set<std::string> classes;
    for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
        GraphBuilder b(n);
        for (int s = 0; s < m; ++s)
            if (mask >> s & 1)
                b.add_edge(slots[static_cast<size_t>(s)].first,
                           slots[static_cast<size_t>(s)].second);
        Graph g = b.build();
        if (is_connected(g)) classes.insert(canonical_form(g));
    }
    return classes.size();
}

int subset_alpha(const Graph& g) {
    int best = 0;
    for (uint64_t mask = 0; mask < (uint64_t{1} << g.order()); ++mask) {
        bool indep = true;
        for_each_bit(mask, [&](int v) {
            if (g.neighbors(v) & mask) indep = false;
        });
        if (indep) best = std::max(best, popcount(mask));
    }
    return best;
}

bool criterion9() {
    bool ok = true;
    std::string detail;
    // (a)-(c): the invariant sweep covers diam=rad+1 on ASC/AP, the
    // center-in-one-block containment, and adjacent eccentricities
    for (int n = 4; n <= 8; ++n) {
        auto r = run_check("invariant_sweep", {{"n", n}}, opts());
        ok = ok && r.passed();
    }
    // (d) generator completeness against the labeled brute force
    uint64_t expected[] = {1, 2, 6, 21, 112, 853};
    for (int n = 2; n <= 7; ++n) {
        uint64_t oracle = labeled_connected_classes(n);
        GenSpec spec;
        spec.order = n;
        uint64_t stream = count_classes(spec, g_jobs);
        bool match = oracle == stream && oracle == expected[n - 2];
        ok = ok && match;
        if (n == 7)
            detail += "n=7 classes " + std::to_string(stream) + " (oracle " +
                      std::to_string(oracle) + ")";
    }
    // (e) independence number against the subset oracle on fixtures up to 16
    const auto& store = FixtureStore::default_store();
    std::vector<Graph> fixtures = {
        store.get("ap_base_7"),    store.get("ap_base_8"),  store.get("ap_base_9"),
        store.get("ap_base_10"),   store.get("cubic_asc_12"), z_graph(16, 7),
        z_graph(15, 5),            regular_asc(7),          girth_extremal_asc(16),
        girth_extremal_asc(14),    ap_max_size(16),         ap_top_extremal(16),
        ap_with_max_degree(16, 6), theta(4, 5, 8),          cycle_pendant(15),
        complete_minus_edge(16),
    };
    for (const auto& g : fixtures) {
        ok = ok && rt(g) && independence_number(g) == subset_alpha(g);
    }
    return report(9, "property suites (structure invariants, completeness, independence oracle)",
                  ok, detail);
}

// ---- criterion 10: serialization and determinism -------------------------------

bool criterion10() {
    bool ok = g_roundtrip_failures == 0;
    std::string detail =
        std::to_string(g_roundtrips) + " graph6 round-trips, " +
        std::to_string(g_roundtrip_failures) + " failures";
    // every enumerated graph of order <= 7 round-trips as well
    for (int n = 2; n <= 7; ++n) {
        GenSpec spec;
        spec.order = n;
        spec.connected = false;
        enumerate(spec, [&](const Graph& g) { ok = ok && rt(g); });
    }
    // byte-identical reports across runs and worker counts
    auto norm = [](CheckReport r) {
        json j = r.to_json();
        j["elapsed_ms"] = 0;
        return j.dump();
    };
    CheckOptions one;
    one.jobs = 1;
    CheckOptions two;
    two.jobs = 2;
    ok = ok && norm(run_check("thm9", {{"n", 8}}, one)) == norm(run_check("thm9", {{"n", 8}}, two));
    ok = ok && norm(run_check("thm5", {{"n", 8}}, one)) == norm(run_check("thm5", {{"n", 8}}, two));
    GenSpec spec;
    spec.order = 7;
    ok = ok && enumerate_collect(spec, 1) == enumerate_collect(spec, 3);
    return report(10, "graph6 round-trip identity and deterministic reports", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
    g_jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (g_jobs < 1) g_jobs = 1;
    for (int i = 1; i < argc; ++i)
        if (std::strncmp(argv[i], "--jobs=", 7) == 0) g_jobs = std::atoi(argv[i] + 7);
    std::printf("acceptance suite (jobs=%d%s)\n", g_jobs,
                std::getenv("ASCGRAPH_FULL") ? ", full" : "");
    int failures = 0;
    failures += !criterion1();
    failures += !criterion2();
    failures += !criterion3();
    failures += !criterion4();
    failures += !criterion5();
    failures += !criterion6();
    failures += !criterion7();
    failures += !criterion8();
    failures += !criterion9();
    failures += !criterion10();
    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
