// Command-line front end: construction, classification, metrics,
// isomorph-free enumeration, extremal scans, and the claim-verification
// suite, with stable text or JSON output.
//
// Exit codes: 0 success / all checks pass, 1 check failure, 2 usage error,
// 3 graph6 parse error.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ascgraph/classify.hpp"
#include "ascgraph/construct.hpp"
#include "ascgraph/enumerate.hpp"
#include "ascgraph/metrics.hpp"
#include "ascgraph/verify.hpp"

using namespace ascgraph;

namespace {

std::vector<std::string> read_graph_lines(const std::vector<std::string>& inputs) {
    std::vector<std::string> lines;
    for (const auto& in : inputs) {
        if (in == "-") {
            std::string line;
            while (std::getline(std::cin, line))
                if (!line.empty()) lines.push_back(line);
        } else {
            lines.push_back(in);
        }
    }
    return lines;
}

using Predicate = std::function<bool(const Graph&)>;

// connectivity-requiring predicates treat disconnected input as non-matching
Predicate predicate_by_name(const std::string& name) {
    if (name == "asc") return [](const Graph& g) { return is_connected(g) && is_asc(g); };
    if (name == "ap") return [](const Graph& g) { return is_connected(g) && is_ap(g); };
    if (name == "self-centered")
        return [](const Graph& g) { return is_connected(g) && is_self_centered(g); };
    if (name == "unicyclic")
        return [](const Graph& g) { return is_connected(g) && is_unicyclic(g); };
    if (name == "theta")
        return [](const Graph& g) { return is_connected(g) && recognize_theta(g).has_value(); };
    if (name == "binocle")
        return [](const Graph& g) { return is_connected(g) && recognize_binocle(g).has_value(); };
    if (name == "connected") return [](const Graph& g) { return is_connected(g); };
    if (name == "cyclic") return [](const Graph& g) { return girth(g).has_value(); };
    throw std::invalid_argument("unknown predicate '" + name + "'");
}

using Statistic = std::function<long(const Graph&)>;

Statistic statistic_by_name(const std::string& name) {
    if (name == "girth") return [](const Graph& g) { return static_cast<long>(girth(g).value()); };
    if (name == "alpha")
        return [](const Graph& g) { return static_cast<long>(independence_number(g)); };
    if (name == "size") return [](const Graph& g) { return static_cast<long>(g.size()); };
    if (name == "order") return [](const Graph& g) { return static_cast<long>(g.order()); };
    if (name == "max-degree")
        return [](const Graph& g) { return static_cast<long>(degree_stats(g).max_degree); };
    if (name == "min-degree")
        return [](const Graph& g) { return static_cast<long>(degree_stats(g).min_degree); };
    if (name == "top-count")
        return [](const Graph& g) { return static_cast<long>(top_vertex_count(g)); };
    if (name == "radius")
        return [](const Graph& g) { return static_cast<long>(ecc_profile(g).radius); };
    if (name == "diameter")
        return [](const Graph& g) { return static_cast<long>(ecc_profile(g).diameter); };
    throw std::invalid_argument("unknown statistic '" + name + "'");
}

json classification_json(const std::string& g6, const Graph& g) {
    auto c = classify(g);
    json j;
    j["graph6"] = g6;
    j["order"] = g.order();
    j["size"] = g.size();
    j["connected"] = c.connected;
    if (c.connected) {
        j["radius"] = c.radius;
        j["diameter"] = c.diameter;
        j["central_vertices"] = c.central_count;
        j["peripheral_vertices"] = c.peripheral_count;
        j["self_centered"] = c.self_centered;
        j["almost_self_centered"] = c.almost_self_centered;
        j["almost_peripheral"] = c.almost_peripheral;
        j["unicyclic"] = c.unicyclic;
        if (c.theta) j["theta"] = {c.theta->a, c.theta->b, c.theta->c};
        if (c.binocle)
            j["binocle"] = {{"cycle_a", c.binocle->cycle_a.to_vector()},
                            {"cycle_b", c.binocle->cycle_b.to_vector()},
                            {"path", c.binocle->path}};
    }
    j["top_vertices"] = c.top_count;
    return j;
}

void print_classification_table(const std::string& g6, const Graph& g, std::ostream& os) {
    auto c = classify(g);
    os << g6 << ": order " << g.order() << ", size " << g.size();
    if (!c.connected) {
        os << ", disconnected\n";
        return;
    }
    os << ", radius " << c.radius << ", diameter " << c.diameter << ", center " << c.central_count
       << ", periphery " << c.peripheral_count;
    if (c.self_centered) os << ", self-centered";
    if (c.almost_self_centered) os << ", almost-self-centered";
    if (c.almost_peripheral) os << ", almost-peripheral";
    if (c.unicyclic) os << ", unicyclic";
    if (c.theta) os << ", theta(" << c.theta->a << "," << c.theta->b << "," << c.theta->c << ")";
    if (c.binocle) os << ", binocle";
    os << "\n";
}

json scan_json(const ScanResult& res, const std::string& objective) {
    json j;
    j["statistic"] = res.statistic;
    j["objective"] = objective;
    j["extremal"] = res.extremal ? json(*res.extremal) : json(nullptr);
    j["attaining_count"] = res.attaining_count;
    j["certificates"] = res.certificates;
    j["truncated"] = res.truncated;
    j["visited"] = res.visited;
    return j;
}

void print_report_line(const CheckReport& r, std::ostream& os) {
    os << r.check_id << " " << r.params.dump() << ": "
       << (r.status == CheckStatus::pass   ? "pass"
           : r.status == CheckStatus::fail ? "FAIL"
                                           : "skipped-out-of-range");
    if (r.status == CheckStatus::skipped)
        os << "  (" << r.computed["reason"].get<std::string>() << ")";
    else
        os << "  claimed=" << r.claimed["value"].dump() << " computed=" << r.computed.dump();
    os << "\n";
}

GenSpec spec_from_flags(int order, int degree, int min_degree, int size_min, int size_max,
                        bool allow_disconnected) {
    GenSpec spec;
    spec.order = order;
    if (degree >= 0) spec.regular_degree = degree;
    if (min_degree >= 0) spec.min_degree = min_degree;
    if (size_min >= 0 || size_max >= 0) {
        int lo = size_min >= 0 ? size_min : 0;
        int hi = size_max >= 0 ? size_max : order * (order - 1) / 2;
        spec.size_range = {{lo, hi}};
    }
    spec.connected = !allow_disconnected;
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"almost self-centered / almost peripheral graph toolkit"};
    app.require_subcommand(1);

    std::string format = "table";
    std::string fixtures_dir;
    int jobs = 1;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: graph6, dot, json, table")
            ->capture_default_str();
        cmd->add_option("--fixtures", fixtures_dir, "fixture directory (default: built-in path)");
        cmd->add_option("--jobs", jobs, "worker threads for enumeration-backed commands (>= 1)")
            ->check(CLI::PositiveNumber);
    };

    // construct
    auto* c_cmd = app.add_subcommand("construct", "build a named family member");
    add_common(c_cmd);
    std::string family;
    std::vector<int> params;
    c_cmd->add_option("family", family,
                      "cycle|path|complete|star|kn-minus-edge|theta|cycle-pendant|"
                      "girth-extremal|z|regular-asc|ap-max-size|ap-degree|ap-top")
        ->required();
    c_cmd->add_option("params", params, "family parameters (see --help and README for domains)");

    // classify
    auto* k_cmd = app.add_subcommand("classify", "classify graphs, or filter a graph6 stream");
    add_common(k_cmd);
    std::vector<std::string> k_inputs;
    k_cmd->add_option("graphs", k_inputs, "graph6 strings, or - for stdin")->required();
    std::string filter_name;
    k_cmd->add_option("--filter", filter_name,
                      "stream-filter mode: asc|ap|self-centered|unicyclic|theta|binocle|"
                      "connected|cyclic");

    // metrics
    auto* m_cmd = app.add_subcommand("metrics", "distance and combinatorial invariants");
    add_common(m_cmd);
    std::vector<std::string> m_inputs;
    m_cmd->add_option("graphs", m_inputs, "graph6 strings, or - for stdin")->required();

    // enumerate
    auto* e_cmd =
        app.add_subcommand("enumerate", "isomorph-free enumeration (canonical graph6, sorted)");
    add_common(e_cmd);
    int e_order = 0, e_degree = -1, e_mindeg = -1, e_smin = -1, e_smax = -1;
    bool e_disconnected = false;
    e_cmd->add_option("--order", e_order, "number of vertices (1..16)")->required();
    e_cmd->add_option("--degree", e_degree, "exact regular degree");
    e_cmd->add_option("--min-degree", e_mindeg, "minimum degree bound");
    e_cmd->add_option("--size-min", e_smin, "minimum edge count");
    e_cmd->add_option("--size-max", e_smax, "maximum edge count");
    e_cmd->add_flag("--allow-disconnected", e_disconnected, "include disconnected graphs");

    // scan
    auto* s_cmd = app.add_subcommand("scan", "extremal statistic over an enumerated class");
    add_common(s_cmd);
    int s_order = 0, s_degree = -1, s_mindeg = -1, s_smin = -1, s_smax = -1, cert_cap = 1000;
    std::string s_filter = "connected", s_stat, s_objective = "max";
    s_cmd->add_option("--order", s_order, "number of vertices (1..16)")->required();
    s_cmd->add_option("--degree", s_degree, "exact regular degree");
    s_cmd->add_option("--min-degree", s_mindeg, "minimum degree bound");
    s_cmd->add_option("--size-min", s_smin, "minimum edge count");
    s_cmd->add_option("--size-max", s_smax, "maximum edge count");
    s_cmd->add_option("--filter", s_filter, "predicate restricting the class (see classify)")
        ->capture_default_str();
    s_cmd->add_option("--stat", s_stat,
                      "girth|alpha|size|order|max-degree|min-degree|top-count|radius|diameter")
        ->required();
    s_cmd->add_option("--objective", s_objective, "max or min")->capture_default_str();
    s_cmd->add_option("--cert-cap", cert_cap, "certificate cap per result")->capture_default_str();

    // verify
    auto* v_cmd = app.add_subcommand("verify", "run one claim check");
    add_common(v_cmd);
    std::string check_id;
    int v_n = INT32_MIN, v_r = INT32_MIN, v_k = INT32_MIN, v_cmax = INT32_MIN;
    v_cmd->add_option("check", check_id,
                      "lemma1|lemma2|lemma3|lemma4|thm5|thm6|cor7|thm8|thm9|thm10|thm11|"
                      "invariant_sweep")
        ->required();
    v_cmd->add_option("--order,-n,--n", v_n, "order parameter n");
    v_cmd->add_option("--radius,-r,--r", v_r, "radius parameter r (thm6; needs r >= 2, n >= 2r+1)");
    v_cmd->add_option("--degree,-k,--k", v_k, "degree parameter k (thm8; 3 <= k <= 12)");
    v_cmd->add_option("--c-max", v_cmax, "largest theta path length (lemma3, default 8)");

    // suite
    auto* u_cmd = app.add_subcommand("suite", "run every check within an order budget");
    add_common(u_cmd);
    int max_n = 9;
    u_cmd->add_option("--max-n", max_n,
                      "order budget (>= 7); 10 also runs the full order-10 girth scan")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    FixtureStore custom_store;
    CheckOptions opt;
    opt.jobs = jobs;
    if (!fixtures_dir.empty()) {
        custom_store = FixtureStore(fixtures_dir);
        opt.fixtures = &custom_store;
    }
    const FixtureStore& store = opt.store();

    try {
        if (*c_cmd) {
            auto id = family_from_name(family);
            if (!id) {
                std::cerr << "unknown family '" << family << "'\n";
                return 2;
            }
            Graph g = build_family(*id, params, store);
            if (format == "dot")
                std::cout << to_dot(g);
            else
                std::cout << to_graph6(g) << "\n";
            return 0;
        }

        if (*k_cmd) {
            auto lines = read_graph_lines(k_inputs);
            if (!filter_name.empty()) {
                Predicate pred = predicate_by_name(filter_name);
                uint64_t kept = 0;
                for (size_t i = 0; i < lines.size(); ++i) {
                    Graph g = [&] {
                        try {
                            return from_graph6(lines[i]);
                        } catch (const graph6_error& e) {
                            std::cerr << "line " << i + 1 << ": " << e.what() << "\n";
                            std::exit(3);
                        }
                    }();
                    if (pred(g)) {
                        ++kept;
                        std::cout << lines[i] << "\n";
                    }
                }
                std::cerr << kept << " of " << lines.size() << " graphs matched '" << filter_name
                          << "'\n";
                return 0;
            }
            json out = json::array();
            for (const auto& line : lines) {
                Graph g = from_graph6(line);
                if (format == "json")
                    out.push_back(classification_json(line, g));
                else
                    print_classification_table(line, g, std::cout);
            }
            if (format == "json") std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (*m_cmd) {
            auto lines = read_graph_lines(m_inputs);
            json out = json::array();
            for (const auto& line : lines) {
                Graph g = from_graph6(line);
                json j;
                j["graph6"] = line;
                j["order"] = g.order();
                j["size"] = g.size();
                auto stats = degree_stats(g);
                j["degree_sequence"] = stats.sequence;
                j["min_degree"] = stats.min_degree;
                j["max_degree"] = stats.max_degree;
                j["top_vertices"] = stats.top_vertices;
                bool conn = is_connected(g);
                j["connected"] = conn;
                if (conn) {
                    auto p = ecc_profile(g);
                    j["eccentricities"] = p.ecc;
                    j["radius"] = p.radius;
                    j["diameter"] = p.diameter;
                    j["center"] = p.center.to_vector();
                    j["periphery"] = p.periphery.to_vector();
                    j["blocks"] = blocks(g).blocks.size();
                }
                auto gi = girth(g);
                j["girth"] = gi ? json(*gi) : json("acyclic");
                j["independence_number"] = independence_number(g);
                if (format == "json") {
                    out.push_back(j);
                } else {
                    std::cout << line << ": order " << g.order() << ", size " << g.size();
                    if (conn)
                        std::cout << ", radius " << j["radius"] << ", diameter " << j["diameter"]
                                  << ", center size " << j["center"].size();
                    std::cout << ", girth " << j["girth"].dump() << ", alpha "
                              << j["independence_number"] << "\n";
                }
            }
            if (format == "json") std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (*e_cmd) {
            GenSpec spec =
                spec_from_flags(e_order, e_degree, e_mindeg, e_smin, e_smax, e_disconnected);
            auto all = enumerate_collect(spec, jobs);
            for (const auto& s : all) std::cout << s << "\n";
            std::cerr << all.size() << " graphs\n";
            return 0;
        }

        if (*s_cmd) {
            GenSpec spec = spec_from_flags(s_order, s_degree, s_mindeg, s_smin, s_smax, false);
            Predicate pred = predicate_by_name(s_filter);
            Statistic stat = statistic_by_name(s_stat);
            if (s_stat == "girth") {
                Predicate base = pred;
                pred = [base](const Graph& g) { return girth(g).has_value() && base(g); };
            }
            if (s_objective != "max" && s_objective != "min") {
                std::cerr << "--objective must be max or min\n";
                return 2;
            }
            auto res = scan(spec, pred, stat,
                            s_objective == "max" ? Objective::maximize : Objective::minimize,
                            s_stat, cert_cap, jobs);
            if (format == "json") {
                std::cout << scan_json(res, s_objective).dump(2) << "\n";
            } else {
                std::cout << s_stat << " " << s_objective << " = "
                          << (res.extremal ? std::to_string(*res.extremal) : "no witness")
                          << " attained by " << res.attaining_count << " graph(s) over "
                          << res.visited << " enumerated\n";
                for (const auto& cert : res.certificates) std::cout << cert << "\n";
            }
            return 0;
        }

        if (*v_cmd) {
            std::map<std::string, int> p;
            if (v_n != INT32_MIN) p["n"] = v_n;
            if (v_r != INT32_MIN) p["r"] = v_r;
            if (v_k != INT32_MIN) p["k"] = v_k;
            if (v_cmax != INT32_MIN) p["c_max"] = v_cmax;
            CheckReport r = run_check(check_id, p, opt);
            if (format == "json")
                std::cout << r.to_json().dump(2) << "\n";
            else
                print_report_line(r, std::cout);
            return r.status == CheckStatus::fail ? 1 : 0;
        }

        if (*u_cmd) {
            auto reports = run_suite(max_n, opt);
            int failed = 0, passed = 0, skipped = 0;
            if (format == "json") {
                json arr = json::array();
                for (const auto& r : reports) arr.push_back(r.to_json());
                std::cout << arr.dump(2) << "\n";
            }
            for (const auto& r : reports) {
                if (format != "json") print_report_line(r, std::cout);
                if (r.status == CheckStatus::pass) ++passed;
                if (r.status == CheckStatus::fail) ++failed;
                if (r.status == CheckStatus::skipped) ++skipped;
            }
            std::cerr << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
            return failed > 0 ? 1 : 0;
        }
    } catch (const graph6_error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
