#pragma once
// One executable check per claimed extremal statement: each compares a
// closed-form claimed value against a value computed from constructors plus
// exhaustive enumeration, and carries graph6 certificates.

#include <chrono>
#include <map>
#include <set>

#include <json.hpp>

#include "ascgraph/construct.hpp"
#include "ascgraph/enumerate.hpp"

namespace ascgraph {

using json = nlohmann::ordered_json;

// Closed-form claimed values; the single source of truth for the formulas.
namespace claims {

// max girth of an ASC graph of order n (n >= 5)
inline long girth_max(int n) {
    if (n % 2 == 1) return n - 1;
    if (n == 10) return 5;
    return 4 * (n / 6);
}

// max independence number of an ASC graph of order n and radius r >= 2
inline long alpha_max(int n, int r) { return n - r; }

// minimum order of a k-regular ASC graph (k >= 3)
inline long regular_min_order(int k) { return k == 3 ? 12 : 2 * k + 2; }

// max size of an AP graph of order n >= 3
inline long size_max(int n) { return static_cast<long>(n - 1) * (n - 1) / 2; }

// possible max degrees of an AP graph of order n >= 7
inline std::vector<int> max_degree_spectrum(int n) {
    std::vector<int> s;
    for (int d = 3; d <= n - 4; ++d) s.push_back(d);
    s.push_back(n - 1);
    return s;
}

// max number of top vertices of an AP graph of order n >= 8 with max degree n-4
inline long top_max(int n) { return n - 5; }

}  // namespace claims

enum class CheckStatus { pass, fail, skipped };

struct CheckReport {
    std::string check_id;
    json params = json::object();
    json claimed = json::object();
    json computed;
    CheckStatus status = CheckStatus::fail;
    std::vector<std::string> certificates;
    std::vector<std::string> assumed_reductions;
    int64_t elapsed_ms = 0;

    bool passed() const { return status == CheckStatus::pass; }

    json to_json() const {
        json j;
        j["check_id"] = check_id;
        j["params"] = params;
        j["claimed"] = claimed;
        j["computed"] = computed;
        j["status"] = status == CheckStatus::pass     ? "pass"
                      : status == CheckStatus::fail   ? "fail"
                                                      : "skipped-out-of-range";
        j["certificates"] = certificates;
        j["assumed_reductions"] = assumed_reductions;
        j["elapsed_ms"] = elapsed_ms;
        return j;
    }
};

struct CheckOptions {
    int jobs = 1;
    int cert_cap = 1000;
    const FixtureStore* fixtures = nullptr;  // defaults to FixtureStore::default_store()

    const FixtureStore& store() const {
        return fixtures ? *fixtures : FixtureStore::default_store();
    }
};

namespace detail {

inline bool stat_girth_defined(const Graph& g) { return girth(g).has_value(); }

inline std::vector<std::string> asc_forms(const GenSpec& spec) {
    std::vector<std::string> out;
    enumerate(spec, [&](const Graph& g) {
        if (is_asc(g)) out.push_back(canonical_form(g));
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline CheckReport check_lemma1(int n, const CheckOptions&) {
    CheckReport r;
    r.check_id = "lemma1";
    r.params["n"] = n;
    r.claimed["statement"] =
        "a unicyclic graph of order n >= 6 is almost self-centered iff n is odd and it is "
        "C_{n-1} plus one pendant edge";
    bool expect_witness = (n % 2 == 1);
    r.claimed["value"] = expect_witness ? 1 : 0;
    GenSpec spec;
    spec.order = n;
    spec.size_range = {{n, n}};
    auto found = asc_forms(spec);
    r.computed = found.size();
    r.certificates = found;
    if (expect_witness) {
        std::string want = canonical_form(cycle_pendant(n));
        r.status = (found.size() == 1 && found[0] == want) ? CheckStatus::pass : CheckStatus::fail;
    } else {
        r.status = found.empty() ? CheckStatus::pass : CheckStatus::fail;
    }
    return r;
}

inline CheckReport check_lemma2(int n, const CheckOptions&) {
    CheckReport r;
    r.check_id = "lemma2";
    r.params["n"] = n;
    r.claimed["statement"] =
        "every connected graph of order n, size n+1 and min degree 2 is a binocle or a theta "
        "(exactly one recognizer accepts)";
    r.claimed["value"] = "dichotomy";
    GenSpec spec;
    spec.order = n;
    spec.size_range = {{n + 1, n + 1}};
    spec.min_degree = 2;
    uint64_t total = 0, violations = 0;
    std::vector<std::string> bad;
    enumerate(spec, [&](const Graph& g) {
        ++total;
        int hits = (recognize_theta(g) ? 1 : 0) + (recognize_binocle(g) ? 1 : 0);
        if (hits != 1) {
            ++violations;
            bad.push_back(canonical_form(g));
        }
    });
    r.computed = json{{"graphs", total}, {"violations", violations}};
    r.certificates = bad;
    r.status = (violations == 0 && total > 0) ? CheckStatus::pass : CheckStatus::fail;
    return r;
}

inline CheckReport check_lemma3(int c_max, const CheckOptions&) {
    CheckReport r;
    r.check_id = "lemma3";
    r.params["c_max"] = c_max;
    r.claimed["statement"] =
        "rad(theta(a,b,c)) = floor((a+c)/2) and diam(theta(a,b,c)) = floor((b+c)/2); "
        "self-centered iff b = a (a+c odd) or b <= a+1 (a+c even); diam = rad+1 iff "
        "a+1 <= b <= a+2 (a+c odd) or a+2 <= b <= a+3 (a+c even)";
    r.claimed["value"] = "formulas";
    long checked = 0, mismatches = 0;
    std::vector<std::string> bad;
    for (int a = 1; a <= c_max; ++a)
        for (int b = std::max(a, 2); b <= c_max; ++b)
            for (int c = b; c <= c_max; ++c) {
                Graph t = theta(a, b, c);
                auto p = ecc_profile(t);
                bool ok = p.radius == (a + c) / 2 && p.diameter == (b + c) / 2;
                bool sc_formula = (a + c) % 2 == 1 ? (b == a) : (b <= a + 1);
                ok = ok && ((p.radius == p.diameter) == sc_formula);
                bool asc_window = (a + c) % 2 == 1 ? (a + 1 <= b && b <= a + 2)
                                                   : (a + 2 <= b && b <= a + 3);
                ok = ok && ((p.diameter == p.radius + 1) == asc_window);
                ++checked;
                if (!ok) {
                    ++mismatches;
                    bad.push_back(canonical_form(t));
                }
            }
    r.computed = json{{"triples", checked}, {"mismatches", mismatches}};
    r.certificates = bad;
    r.status = mismatches == 0 ? CheckStatus::pass : CheckStatus::fail;
    return r;
}

inline CheckReport check_lemma4(int n, const CheckOptions&) {
    CheckReport r;
    r.check_id = "lemma4";
    r.params["n"] = n;
    r.claimed["statement"] =
        "a connected graph of order n, size n+1, min degree 2 is almost self-centered iff n is "
        "even and it is theta(1,2,n-2)";
    bool expect_witness = (n % 2 == 0);
    r.claimed["value"] = expect_witness ? 1 : 0;
    GenSpec spec;
    spec.order = n;
    spec.size_range = {{n + 1, n + 1}};
    spec.min_degree = 2;
    auto found = asc_forms(spec);
    r.computed = found.size();
    r.certificates = found;
    if (expect_witness) {
        std::string want = canonical_form(theta(1, 2, n - 2));
        r.status = (found.size() == 1 && found[0] == want) ? CheckStatus::pass : CheckStatus::fail;
    } else {
        r.status = found.empty() ? CheckStatus::pass : CheckStatus::fail;
    }
    return r;
}

inline CheckReport check_thm5(int n, const CheckOptions& opt) {
    CheckReport r;
    r.check_id = "thm5";
    r.params["n"] = n;
    r.claimed["statement"] =
        "max girth of an almost self-centered graph of order n: n-1 (n odd), 4*floor(n/6) "
        "(n even, n != 10), 5 (n = 10); unique extremal when 6 | n >= 12; at least three "
        "extremals for even n >= 14 not divisible by 6";
    long want = claims::girth_max(n);
    r.claimed["value"] = want;
    GenSpec spec;
    spec.order = n;
    bool sparse = n > 10;
    if (sparse) {
        spec.size_range = {{n + 1, n + 2}};
        r.assumed_reductions.push_back(
            "sizes >= n+3 excluded via the cited girth bound floor(4(n+3)/9) < 4*floor(n/6) "
            "for these orders (assumed, not enumerated)");
        r.assumed_reductions.push_back(
            "size n excluded by the unicyclic characterization: no even-order unicyclic graph "
            "is almost self-centered (checked separately by lemma1)");
    }
    auto res = scan(
        spec, [](const Graph& g) { return girth(g).has_value() && is_asc(g); },
        [](const Graph& g) { return static_cast<long>(*girth(g)); }, Objective::maximize, "girth",
        opt.cert_cap, opt.jobs);
    bool ok = res.extremal && *res.extremal == want;
    json comp;
    comp["girth"] = res.extremal ? json(*res.extremal) : json(nullptr);
    comp["extremal_count"] = res.attaining_count;
    comp["visited"] = res.visited;
    if (n >= 12 && n % 6 == 0) {
        ok = ok && res.attaining_count == 1 &&
             res.certificates == std::vector<std::string>{canonical_form(girth_extremal_asc(n))};
        comp["unique_matches_constructor"] = ok;
    } else if (n >= 14 && n % 2 == 0) {
        ok = ok && res.attaining_count >= 3;
    }
    r.computed = comp;
    r.certificates = res.certificates;
    r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    return r;
}

inline CheckReport check_thm6(int n, int rad, const CheckOptions& opt) {
    CheckReport r;
    r.check_id = "thm6";
    r.params["n"] = n;
    r.params["r"] = rad;
    r.claimed["statement"] =
        "max independence number of an almost self-centered graph of order n and radius r >= 2 "
        "is n-r, attained by Z(n,r)";
    long want = claims::alpha_max(n, rad);
    r.claimed["value"] = want;
    GenSpec spec;
    spec.order = n;
    auto res = scan(
        spec,
        [rad](const Graph& g) {
            if (!is_asc(g)) return false;
            return ecc_profile(g).radius == rad;
        },
        [](const Graph& g) { return static_cast<long>(independence_number(g)); },
        Objective::maximize, "alpha", opt.cert_cap, opt.jobs);
    Graph z = z_graph(n, rad);
    bool z_ok = is_asc(z) && ecc_profile(z).radius == rad && independence_number(z) == want;
    std::string zform = canonical_form(z);
    bool z_listed = std::binary_search(res.certificates.begin(), res.certificates.end(), zform);
    bool ok = res.extremal && *res.extremal == want && z_ok && (z_listed || res.truncated);
    r.computed = json{{"alpha", res.extremal ? json(*res.extremal) : json(nullptr)},
                      {"extremal_count", res.attaining_count},
                      {"z_graph_attains", z_ok},
                      {"z_graph_listed", z_listed}};
    r.certificates = res.certificates;
    r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    return r;
}

inline CheckReport check_cor7(int n, const CheckOptions& opt) {
    CheckReport r;
    r.check_id = "cor7";
    r.params["n"] = n;
    r.claimed["statement"] =
        "max independence number of an almost self-centered graph of order n >= 5 is n-2, with "
        "exactly two extremal graphs (S-vertices joined to {x2,x4} or to {x2,x3} on a diametral "
        "path x1 x2 x3 x4)";
    r.claimed["value"] = n - 2;
    GenSpec spec;
    spec.order = n;
    auto res = scan(
        spec, [](const Graph& g) { return is_asc(g); },
        [](const Graph& g) { return static_cast<long>(independence_number(g)); },
        Objective::maximize, "alpha", opt.cert_cap, opt.jobs);
    // the two graphs described by the proof recipe
    GraphBuilder a(n), b(n);
    for (GraphBuilder* gb : {&a, &b}) {
        gb->add_edge(0, 1);
        gb->add_edge(1, 2);
        gb->add_edge(2, 3);
    }
    for (int s = 4; s < n; ++s) {
        a.add_edge(s, 1);
        a.add_edge(s, 3);  // T = {x1,x3}: S joined to x2 and x4
        b.add_edge(s, 1);
        b.add_edge(s, 2);  // T = {x1,x4}: S joined to x2 and x3
    }
    std::vector<std::string> want = {canonical_form(a.build()), canonical_form(b.build())};
    std::sort(want.begin(), want.end());
    bool ok = res.extremal && *res.extremal == n - 2 && res.attaining_count == 2 &&
              res.certificates == want;
    r.computed = json{{"alpha", res.extremal ? json(*res.extremal) : json(nullptr)},
                      {"extremal_count", res.attaining_count},
                      {"recipe_graphs_match", res.certificates == want}};
    r.certificates = res.certificates;
    r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    return r;
}

inline CheckReport check_thm8(int k, const CheckOptions& opt) {
    CheckReport r;
    r.check_id = "thm8";
    r.params["k"] = k;
    r.claimed["statement"] =
        "minimum order of a k-regular almost self-centered graph: 12 for k = 3, 2k+2 for k >= 4";
    long want = claims::regular_min_order(k);
    r.claimed["value"] = want;
    json comp;
    bool ok = true;
    if (k <= 4) {
        json below = json::array();
        for (int n = k + 1; n < want; ++n) {
            if ((n * k) % 2 != 0) continue;
            GenSpec spec;
            spec.order = n;
            spec.regular_degree = k;
            uint64_t classes = 0, asc = 0;
            enumerate(spec, [&](const Graph& g) {
                ++classes;
                if (is_asc(g)) ++asc;
            });
            below.push_back(json{{"order", n}, {"classes", classes}, {"asc", asc}});
            if (asc != 0) ok = false;
        }
        comp["below_minimum"] = below;
    } else {
        r.assumed_reductions.push_back(
            "orders below 2k+2 not enumerated for k >= 5; a k-regular ASC graph has two "
            "peripheral vertices with disjoint closed neighborhoods, forcing order >= 2k+2");
    }
    if (k == 3) {
        GenSpec spec;
        spec.order = 12;
        spec.regular_degree = 3;
        uint64_t classes = 0;
        std::vector<std::string> asc;
        enumerate(spec, [&](const Graph& g) {
            ++classes;
            if (is_asc(g)) asc.push_back(canonical_form(g));
        });
        std::sort(asc.begin(), asc.end());
        comp["order12_cubic_classes"] = classes;
        comp["order12_asc"] = asc.size();
        const auto& witness = opt.store().get("cubic_asc_12");
        bool listed = std::binary_search(asc.begin(), asc.end(), canonical_form(witness));
        comp["stored_certificate_found"] = listed;
        ok = ok && !asc.empty() && listed && is_asc(witness);
        r.certificates = asc;
    } else {
        Graph g = regular_asc(k);
        auto p = ecc_profile(g);
        bool witness_ok = g.order() == 2 * k + 2 && is_asc(g) &&
                          p.periphery == VertexSet(vbit(0) | vbit(k + 1)) &&
                          p.center.count() == 2 * k;
        comp["witness_order"] = g.order();
        comp["witness_ok"] = witness_ok;
        ok = ok && witness_ok;
        r.certificates.push_back(canonical_form(g));
    }
    r.computed = comp;
    r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    return r;
}

inline CheckReport check_thm9(int n, const CheckOptions& opt) {
    CheckReport r;
    r.check_id = "thm9";
    r.params["n"] = n;
    r.claimed["statement"] =
        "max size of an almost peripheral graph of order n is floor((n-1)^2/2), attained "
        "uniquely (complement of K_1 + m K_2, resp. K_1 + m K_2 + P_3)";
    long want = claims::size_max(n);
    r.claimed["value"] = want;
    GenSpec spec;
    spec.order = n;
    auto res = scan(
        spec, [](const Graph& g) { return is_ap(g); },
        [](const Graph& g) { return static_cast<long>(g.size()); }, Objective::maximize, "size",
        opt.cert_cap, opt.jobs);
    std::string want_form = canonical_form(ap_max_size(n));
    bool ok = res.extremal && *res.extremal == want && res.attaining_count == 1 &&
              res.certificates == std::vector<std::string>{want_form};
    r.computed = json{{"size", res.extremal ? json(*res.extremal) : json(nullptr)},
                      {"extremal_count", res.attaining_count},
                      {"unique_matches_constructor",
                       res.certificates == std::vector<std::string>{want_form}}};
    r.certificates = res.certificates;
    r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    return r;
}

inline CheckReport check_thm10(int n, const CheckOptions& opt) {
    CheckReport r;
    r.check_id = "thm10";
    r.params["n"] = n;
    r.claimed["statement"] =
        "an almost peripheral graph of order n >= 7 with max degree D exists iff D is in "
        "{3,...,n-4} union {n-1}";
    auto spectrum = claims::max_degree_spectrum(n);
    r.claimed["value"] = spectrum;
    json comp;
    bool ok = true;
    if (n <= 9) {
        std::set<int> seen;
        std::map<int, std::string> sample;
        GenSpec spec;
        spec.order = n;
        enumerate(spec, [&](const Graph& g) {
            if (!is_ap(g)) return;
            int d = degree_stats(g).max_degree;
            auto [it, fresh] = sample.try_emplace(d, "");
            if (fresh) it->second = canonical_form(g);
            seen.insert(d);
        });
        std::vector<int> got(seen.begin(), seen.end());
        comp["enumerated_spectrum"] = got;
        ok = got == spectrum;
        for (auto& [d, form] : sample) r.certificates.push_back(form);
    } else {
        r.assumed_reductions.push_back(
            "spectrum verified by construction only; full enumeration is limited to order 9");
    }
    // constructor chain over the whole claimed spectrum
    json built = json::array();
    for (int d : spectrum) {
        try {
            Graph g = ap_with_max_degree(n, d, opt.store());
            bool good = is_ap(g) && degree_stats(g).max_degree == d && g.order() == n;
            if (!good) ok = false;
            built.push_back(json{{"delta", d}, {"ok", good}});
        } catch (const std::exception& e) {
            ok = false;
            built.push_back(json{{"delta", d}, {"error", e.what()}});
        }
    }
    // the two impossible values must be rejected by the constructor
    for (int d : {n - 3, n - 2}) {
        bool rejected = false;
        try {
            ap_with_max_degree(n, d, opt.store());
        } catch (const std::invalid_argument&) {
            rejected = true;
        }
        if (!rejected) ok = false;
        built.push_back(json{{"delta", d}, {"rejected", rejected}});
    }
    comp["constructed"] = built;
    r.computed = comp;
    r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    return r;
}

inline CheckReport check_thm11(int n, const CheckOptions& opt) {
    CheckReport r;
    r.check_id = "thm11";
    r.params["n"] = n;
    r.claimed["statement"] =
        "max number of top vertices of an almost peripheral graph of order n >= 8 with max "
        "degree n-4 is n-5, attained uniquely by blowing up a non-central degree-3 vertex of "
        "the order-7 base into K_{n-6}";
    long want = claims::top_max(n);
    r.claimed["value"] = want;
    Graph built = ap_top_extremal(n, opt.store());
    auto stats = degree_stats(built);
    bool built_ok = is_ap(built) && stats.max_degree == n - 4 &&
                    static_cast<int>(stats.top_vertices.size()) == n - 5;
    json comp;
    comp["constructor_ok"] = built_ok;
    bool ok = built_ok;
    if (n <= 9) {
        GenSpec spec;
        spec.order = n;
        auto res = scan(
            spec,
            [n](const Graph& g) {
                return degree_stats(g).max_degree == n - 4 && is_ap(g);
            },
            [](const Graph& g) { return static_cast<long>(top_vertex_count(g)); },
            Objective::maximize, "top_vertices", opt.cert_cap, opt.jobs);
        std::string want_form = canonical_form(built);
        bool unique = res.extremal && *res.extremal == want && res.attaining_count == 1 &&
                      res.certificates == std::vector<std::string>{want_form};
        comp["top_vertices"] = res.extremal ? json(*res.extremal) : json(nullptr);
        comp["extremal_count"] = res.attaining_count;
        comp["unique_matches_constructor"] = unique;
        ok = ok && unique;
        r.certificates = res.certificates;
    } else {
        r.assumed_reductions.push_back(
            "uniqueness verified by enumeration only at orders 8 and 9; above that the "
            "constructor postconditions are checked");
        r.certificates.push_back(canonical_form(built));
    }
    r.computed = comp;
    r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    return r;
}

inline CheckReport check_invariant_sweep(int n, const CheckOptions&) {
    CheckReport r;
    r.check_id = "invariant_sweep";
    r.params["n"] = n;
    r.claimed["statement"] =
        "every ASC/AP graph has diameter = radius + 1; the center lies within one block; "
        "adjacent eccentricities differ by at most one; radius <= diameter <= 2 radius";
    r.claimed["value"] = 0;
    uint64_t graphs = 0, violations = 0;
    std::vector<std::string> bad;
    GenSpec spec;
    spec.order = n;
    enumerate(spec, [&](const Graph& g) {
        ++graphs;
        auto p = ecc_profile(g);
        bool ok = p.radius <= p.diameter && p.diameter <= 2 * p.radius;
        int central = p.center.count();
        int peripheral = p.periphery.count();
        if ((central == g.order() - 2 || peripheral == g.order() - 1) && g.order() >= 3)
            ok = ok && p.diameter == p.radius + 1;
        for (int u = 0; u < g.order() && ok; ++u)
            for_each_bit(g.neighbors(u), [&](int v) {
                if (std::abs(p.ecc[static_cast<size_t>(u)] - p.ecc[static_cast<size_t>(v)]) > 1)
                    ok = false;
            });
        if (ok) {
            auto bd = blocks(g);
            bool contained = false;
            for (const auto& blk : bd.blocks)
                if ((p.center.bits() & ~blk.bits()) == 0) contained = true;
            ok = contained;
        }
        if (!ok) {
            ++violations;
            bad.push_back(canonical_form(g));
        }
    });
    r.computed = json{{"graphs", graphs}, {"violations", violations}};
    r.certificates = bad;
    r.status = violations == 0 ? CheckStatus::pass : CheckStatus::fail;
    return r;
}

}  // namespace detail

// Runs one check; unknown parameters or out-of-domain values give the
// "skipped-out-of-range" status (never a silent pass). Exceptions inside a
// check surface as failures with the message recorded.
inline CheckReport run_check(const std::string& id, const std::map<std::string, int>& params,
                             const CheckOptions& opt = {}) {
    auto t0 = std::chrono::steady_clock::now();
    auto get = [&](const std::string& key, int fallback = INT32_MIN) {
        auto it = params.find(key);
        if (it != params.end()) return it->second;
        if (fallback != INT32_MIN) return fallback;
        throw std::invalid_argument("check '" + id + "' needs parameter '" + key + "'");
    };
    CheckReport r;
    auto skipped = [&](const std::string& why) {
        r.check_id = id;
        for (auto& [k, v] : params) r.params[k] = v;
        r.status = CheckStatus::skipped;
        r.computed = json{{"reason", why}};
        return r;
    };
    try {
        if (id == "lemma1") {
            int n = get("n");
            if (n < 6 || n > 10) return skipped("lemma1 runs for 6 <= n <= 10");
            r = detail::check_lemma1(n, opt);
        } else if (id == "lemma2") {
            int n = get("n");
            if (n < 4 || n > 9) return skipped("lemma2 runs for 4 <= n <= 9");
            r = detail::check_lemma2(n, opt);
        } else if (id == "lemma3") {
            int c = get("c_max", 8);
            if (c < 1 || c > 20) return skipped("lemma3 runs for 1 <= c_max <= 20");
            r = detail::check_lemma3(c, opt);
        } else if (id == "lemma4") {
            int n = get("n");
            if (n < 5 || n > 10) return skipped("lemma4 runs for 5 <= n <= 10");
            r = detail::check_lemma4(n, opt);
        } else if (id == "thm5") {
            int n = get("n");
            bool full = n >= 5 && n <= 10;
            bool sparse = n >= 12 && n <= 16 && n % 2 == 0;
            if (!full && !sparse)
                return skipped("thm5 runs for 5 <= n <= 10 (full) and even 12 <= n <= 16 (sparse)");
            r = detail::check_thm5(n, opt);
        } else if (id == "thm6") {
            int n = get("n"), rad = get("r");
            if (n < 5 || n > 9) return skipped("thm6 enumeration runs for 5 <= n <= 9");
            if (rad < 2 || n < 2 * rad + 1)
                return skipped("thm6 needs r >= 2 and n >= 2r+1 (Z(n,r) domain)");
            r = detail::check_thm6(n, rad, opt);
        } else if (id == "cor7") {
            int n = get("n");
            if (n < 5 || n > 9) return skipped("cor7 runs for 5 <= n <= 9");
            r = detail::check_cor7(n, opt);
        } else if (id == "thm8") {
            int k = get("k");
            if (k < 3 || k > 12) return skipped("thm8 runs for 3 <= k <= 12");
            r = detail::check_thm8(k, opt);
        } else if (id == "thm9") {
            int n = get("n");
            if (n < 3 || n > 9) return skipped("thm9 enumeration runs for 3 <= n <= 9");
            r = detail::check_thm9(n, opt);
        } else if (id == "thm10") {
            int n = get("n");
            if (n < 7 || n > 20) return skipped("thm10 runs for 7 <= n <= 20");
            r = detail::check_thm10(n, opt);
        } else if (id == "thm11") {
            int n = get("n");
            if (n < 8 || n > 30) return skipped("thm11 runs for 8 <= n <= 30");
            r = detail::check_thm11(n, opt);
        } else if (id == "invariant_sweep") {
            int n = get("n");
            if (n < 2 || n > 8) return skipped("invariant_sweep runs for 2 <= n <= 8");
            r = detail::check_invariant_sweep(n, opt);
        } else {
            throw std::invalid_argument("unknown check id '" + id + "'");
        }
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        r.check_id = id;
        for (auto& [k, v] : params) r.params[k] = v;
        r.status = CheckStatus::fail;
        r.computed = json{{"error", e.what()}};
    }
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return r;
}

inline const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids = {"lemma1", "lemma2", "lemma3", "lemma4",
                                                 "thm5",   "thm6",   "cor7",   "thm8",
                                                 "thm9",   "thm10",  "thm11",  "invariant_sweep"};
    return ids;
}

// Every check at every parameter within the order budget. max_n bounds the
// order of any enumeration a check may run.
inline std::vector<CheckReport> run_suite(int max_n, const CheckOptions& opt = {}) {
    if (max_n < 7) throw std::invalid_argument("run_suite needs max_n >= 7");
    std::vector<CheckReport> out;
    auto add = [&](const std::string& id, std::map<std::string, int> p) {
        out.push_back(run_check(id, p, opt));
    };
    auto add_budget_skip = [&](const std::string& id, std::map<std::string, int> p, int needed) {
        CheckReport r;
        r.check_id = id;
        for (auto& [k, v] : p) r.params[k] = v;
        r.status = CheckStatus::skipped;
        r.computed = json{{"reason", "order budget max_n=" + std::to_string(max_n) +
                                         " is below the required " + std::to_string(needed)}};
        out.push_back(std::move(r));
    };
    for (int n = 6; n <= std::min(10, max_n); ++n) add("lemma1", {{"n", n}});
    for (int n = 4; n <= std::min(9, max_n); ++n) add("lemma2", {{"n", n}});
    add("lemma3", {{"c_max", 8}});
    for (int n = 5; n <= std::min(10, max_n); ++n) add("lemma4", {{"n", n}});
    for (int n = 5; n <= std::min(10, max_n); ++n) add("thm5", {{"n", n}});
    for (int n = 12; n <= std::min(16, max_n); n += 2) add("thm5", {{"n", n}});
    for (int n = 5; n <= std::min(9, max_n); ++n)
        for (int rad = 2; 2 * rad + 1 <= n; ++rad) add("thm6", {{"n", n}, {"r", rad}});
    for (int n = 5; n <= std::min(9, max_n); ++n) add("cor7", {{"n", n}});
    if (max_n >= 12)
        add("thm8", {{"k", 3}});
    else
        add_budget_skip("thm8", {{"k", 3}}, 12);
    for (int k = 4; 2 * k + 2 <= max_n && k <= 12; ++k) add("thm8", {{"k", k}});
    for (int n = 3; n <= std::min(9, max_n); ++n) add("thm9", {{"n", n}});
    for (int n = 7; n <= std::min(20, max_n); ++n) add("thm10", {{"n", n}});
    if (max_n >= 8)
        for (int n = 8; n <= std::min(30, max_n); ++n) add("thm11", {{"n", n}});
    else
        add_budget_skip("thm11", {{"n", 8}}, 8);
    for (int n = 4; n <= std::min(8, max_n); ++n) add("invariant_sweep", {{"n", n}});
    return out;
}

}  // namespace ascgraph
