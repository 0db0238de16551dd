#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <mtamari/errors.hpp>
#include <mtamari/formulas.hpp>
#include <mtamari/lattice.hpp>
#include <mtamari/series.hpp>
#include <mtamari/verify.hpp>

namespace {

using nlohmann::ordered_json;
using namespace mtamari;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_resource_limit = 2;
constexpr int exit_usage = 64;

struct run_config {
    int m = 1;
    int n = 1;
    int order = 6;
    int i = 0;
    bool brute = false;
    bool by_contacts = false;
    bool table = false;
    bool with_y = false;
    bool with_q = false;
    bool grid = false;
    std::string format = "text";
    std::size_t node_cap = hasse_diagram::default_node_cap;
    int z_order = 20;
    int m_max = 3;
    int n_max = 0;
    std::string suite = "all";
    bool timing = false;
};

void print_json(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_count(const run_config& c)
{
    const integer total = count_intervals(c.m, c.n);
    std::optional<interval_statistics> stats;
    if (c.brute) {
        stats = interval_table(build_hasse(c.m, c.n, c.node_cap));
    }
    bool ok = true;
    const auto brute_total = [&] { return integer(static_cast<unsigned long>(stats->intervals)); };
    const auto brute_row = [&](int i) {
        const auto it = stats->by_contacts.find(i);
        return integer(static_cast<unsigned long>(it == stats->by_contacts.end() ? 0 : it->second));
    };

    if (c.format == "json") {
        ordered_json j{{"schema", "mtamari.count/1"}, {"m", c.m}, {"n", c.n}, {"intervals", total.get_str()}};
        if (stats) {
            j["brute_force"] = brute_total().get_str();
            ok = ok && brute_total() == total;
        }
        if (c.by_contacts) {
            ordered_json rows = ordered_json::array();
            for (int i = 2; i <= c.n + 1; ++i) {
                const integer v = count_by_contacts(c.m, c.n, i);
                ordered_json row{{"i", i}, {"count", v.get_str()}};
                if (stats) {
                    row["brute_force"] = brute_row(i).get_str();
                    ok = ok && brute_row(i) == v;
                }
                rows.push_back(row);
            }
            j["by_contacts"] = rows;
        }
        j["consistent"] = ok;
        print_json(j);
        return ok ? exit_ok : exit_check_failed;
    }

    if (stats) {
        const bool same = brute_total() == total;
        ok = ok && same;
        std::cout << total.get_str() << " (formula) " << (same ? "=" : "!=") << ' ' << brute_total().get_str()
                  << " (brute force)\n";
    } else {
        std::cout << total.get_str() << '\n';
    }
    if (c.by_contacts) {
        for (int i = 2; i <= c.n + 1; ++i) {
            const integer v = count_by_contacts(c.m, c.n, i);
            std::cout << "i=" << i << ": " << v.get_str();
            if (stats) {
                const bool same = brute_row(i) == v;
                ok = ok && same;
                std::cout << " (formula) " << (same ? "=" : "!=") << ' ' << brute_row(i).get_str() << " (brute force)";
            }
            std::cout << '\n';
        }
    }
    return ok ? exit_ok : exit_check_failed;
}

std::string coefficient_string(const rational& q) { return q.get_str(); }

int cmd_series(const run_config& c)
{
    const solve_options opts{.with_y = c.with_y, .with_q = c.with_q};
    const interval_series f = solve_f(c.m, c.order, opts);
    if (c.format == "json") {
        ordered_json coeffs = ordered_json::array();
        for (int n = 0; n <= f.order(); ++n) {
            ordered_json terms = ordered_json::array();
            for (const auto& [e, v] : f[n].terms()) {
                terms.push_back(ordered_json::array({e[var_x], e[var_y], e[var_q], coefficient_string(v)}));
            }
            coeffs.push_back({{"n", n}, {"terms", terms}});
        }
        print_json({{"schema", "mtamari.series/1"},
                    {"m", c.m},
                    {"order", c.order},
                    {"with_y", c.with_y},
                    {"with_q", c.with_q},
                    {"coeffs", coeffs}});
        return exit_ok;
    }
    if (c.grid) {
        std::cout << "n\ti\tr\tk\tcount\n";
        for (int n = 0; n <= f.order(); ++n) {
            for (const auto& [e, v] : f[n].terms()) {
                std::cout << n << '\t' << e[var_x] << '\t' << e[var_y] << '\t' << e[var_q] << '\t'
                          << coefficient_string(v) << '\n';
            }
        }
        return exit_ok;
    }
    const rational_series at_one = evaluate(f, 1, 1, 1);
    for (int n = 0; n <= at_one.order(); ++n) {
        std::cout << (n ? ", " : "") << coefficient_string(at_one[n]);
    }
    std::cout << '\n';
    return exit_ok;
}

int cmd_hasse(const run_config& c)
{
    const auto h = build_hasse(c.m, c.n, c.node_cap);
    if (c.format == "dot") {
        std::cout << export_dot(h);
        return exit_ok;
    }
    if (c.format == "json") {
        ordered_json nodes = ordered_json::array();
        ordered_json edges = ordered_json::array();
        for (std::size_t a = 0; a < h.node_count(); ++a) {
            nodes.push_back(h.node(a).to_string());
            for (std::size_t b : h.covers_of(a)) {
                edges.push_back(ordered_json::array({a, b}));
            }
        }
        print_json({{"schema", "mtamari.hasse/1"},
                    {"m", c.m},
                    {"n", c.n},
                    {"nodes", nodes},
                    {"edges", edges},
                    {"minimum", h.minimum()},
                    {"maximum", h.maximum()}});
        return exit_ok;
    }
    std::cout << h.node_count() << " nodes, " << h.edge_count() << " cover edges\n";
    for (std::size_t a = 0; a < h.node_count(); ++a) {
        std::cout << h.node(a).to_string() << " ->";
        for (std::size_t b : h.covers_of(a)) {
            std::cout << ' ' << h.node(b).to_string();
        }
        std::cout << '\n';
    }
    return exit_ok;
}

int cmd_intervals(const run_config& c)
{
    const auto stats = interval_table(build_hasse(c.m, c.n, c.node_cap));
    if (c.format == "json") {
        ordered_json by_contacts = ordered_json::array();
        for (const auto& [i, count] : stats.by_contacts) {
            by_contacts.push_back(ordered_json::array({i, count}));
        }
        ordered_json joint = ordered_json::array();
        for (const auto& [key, count] : stats.joint) {
            joint.push_back(ordered_json::array({std::get<0>(key), std::get<1>(key), std::get<2>(key), count}));
        }
        print_json({{"schema", "mtamari.intervals/1"},
                    {"m", c.m},
                    {"n", c.n},
                    {"intervals", stats.intervals},
                    {"by_contacts", by_contacts},
                    {"joint", joint}});
        return exit_ok;
    }
    std::cout << "intervals: " << stats.intervals << '\n';
    for (const auto& [i, count] : stats.by_contacts) {
        std::cout << "contacts " << i << ": " << count << '\n';
    }
    std::cout << "contacts-1\trise\tchain\tcount\n";
    for (const auto& [key, count] : stats.joint) {
        std::cout << std::get<0>(key) << '\t' << std::get<1>(key) << '\t' << std::get<2>(key) << '\t' << count << '\n';
    }
    return exit_ok;
}

int cmd_formula(const run_config& c)
{
    if (c.table) {
        ordered_json rows = ordered_json::array();
        for (int i = 2; i <= c.n + 1; ++i) {
            rows.push_back({{"i", i},
                            {"p_m", contact_polynomial(c.m, c.n, i).get_str()},
                            {"count", count_by_contacts(c.m, c.n, i).get_str()}});
        }
        print_json({{"schema", "mtamari.formula/1"},
                    {"m", c.m},
                    {"n", c.n},
                    {"intervals", count_intervals(c.m, c.n).get_str()},
                    {"rows", rows}});
        return exit_ok;
    }
    if (c.i != 0) {
        std::cout << count_by_contacts(c.m, c.n, c.i).get_str() << '\n';
    } else {
        std::cout << count_intervals(c.m, c.n).get_str() << '\n';
    }
    return exit_ok;
}

int cmd_verify(const run_config& c)
{
    const verify_options o{.m_max = c.m_max, .n_max = c.n_max, .order = c.order, .z_order = c.z_order};
    std::vector<std::string> suites;
    if (c.suite == "all") {
        suites = suite_names();
    } else {
        suites.push_back(c.suite);
    }
    int failed = 0;
    int total = 0;
    for (const auto& s : suites) {
        const auto start = std::chrono::steady_clock::now();
        for (const auto& r : run_suite(s, o)) {
            ++total;
            failed += r.passed ? 0 : 1;
            std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name;
            if (!r.passed && !r.detail.empty()) {
                std::cout << "  [" << r.detail << ']';
            }
            std::cout << '\n';
        }
        if (c.timing) {
            const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
            std::cerr << s << ": " << dt.count() << " s\n";
        }
    }
    std::cout << (failed ? "FAIL" : "PASS") << ": " << (total - failed) << '/' << total << " checks passed\n";
    return failed ? exit_check_failed : exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"m-Tamari lattices: interval enumeration, counting formulas and identity checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("mtamari 1.0"));
    run_config c;

    const auto add_mn = [&](CLI::App* sub) {
        sub->add_option("--m", c.m, "Path parameter m")->required()->check(CLI::Range(1, 1000));
        sub->add_option("--n", c.n, "Size n")->required()->check(CLI::Range(1, 100000));
    };
    const auto add_cap = [&](CLI::App* sub) {
        sub->add_option("--node-cap", c.node_cap, "Refuse to build diagrams with more nodes")
            ->check(CLI::PositiveNumber);
    };

    auto* count = app.add_subcommand("count", "Number of intervals, optionally cross-checked by enumeration");
    add_mn(count);
    add_cap(count);
    count->add_flag("--brute", c.brute, "Also enumerate all intervals and compare");
    count->add_flag("--by-contacts", c.by_contacts, "Refine by the contacts of the lower path");
    count->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));

    auto* series = app.add_subcommand("series", "Coefficients of the interval generating function");
    series->add_option("--m", c.m, "Path parameter m")->required()->check(CLI::Range(1, 100));
    series->add_option("--order", c.order, "Truncation order in t")->check(CLI::Range(0, 200));
    series->add_flag("--with-y", c.with_y, "Track the initial rise of the upper path");
    series->add_flag("--with-q", c.with_q, "Track the longest chain");
    series->add_flag("--grid", c.grid, "Print every monomial as n, i, r, k, count");
    series->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));

    auto* hasse = app.add_subcommand("hasse", "Cover diagram of the lattice");
    add_mn(hasse);
    add_cap(hasse);
    hasse->add_option("--format", c.format)->check(CLI::IsMember({"text", "json", "dot"}));

    auto* intervals = app.add_subcommand("intervals", "Joint interval statistics by enumeration");
    add_mn(intervals);
    add_cap(intervals);
    intervals->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));

    auto* formula = app.add_subcommand("formula", "Closed-form counts");
    add_mn(formula);
    formula->add_option("--i", c.i, "Number of contacts of the lower path")->check(CLI::Range(2, 100001));
    formula->add_flag("--table", c.table, "All contact counts as JSON");

    auto* verify = app.add_subcommand("verify", "Run exhaustive verification suites");
    std::vector<std::string> choices = suite_names();
    choices.insert(choices.begin(), "all");
    verify->add_option("--suite", c.suite)->check(CLI::IsMember(choices));
    verify->add_option("--m-max", c.m_max)->check(CLI::Range(1, 6));
    verify->add_option("--n-max", c.n_max, "Override the per-suite size grid")->check(CLI::Range(0, 8));
    verify->add_option("--order", c.order)->check(CLI::Range(0, 40));
    verify->add_option("--z-order", c.z_order)->check(CLI::Range(1, 60));
    verify->add_flag("--timing", c.timing, "Report per-suite wall time on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (count->parsed()) {
            return cmd_count(c);
        }
        if (series->parsed()) {
            return cmd_series(c);
        }
        if (hasse->parsed()) {
            return cmd_hasse(c);
        }
        if (intervals->parsed()) {
            return cmd_intervals(c);
        }
        if (formula->parsed()) {
            if (c.i > c.n + 1) {
                throw out_of_range("--i must be at most n+1");
            }
            return cmd_formula(c);
        }
        return cmd_verify(c);
    } catch (const resource_limit& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return exit_resource_limit;
    } catch (const check_failure& e) {
        std::cerr << "check failed: " << e.what() << '\n';
        return exit_check_failed;
    } catch (const invalid_input& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return exit_usage;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_check_failed;
    }
}
