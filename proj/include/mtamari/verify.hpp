#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "formulas.hpp"
#include "identities.hpp"
#include "lattice.hpp"
#include "paths.hpp"
#include "series.hpp"
#include "tree.hpp"

namespace mtamari {

// ---------------------------------------------------------------------------
// Generating functions assembled from exhaustive enumeration.

// sum over intervals of size mn <= m*order of t^n x^contacts y^rise q^chain.
inline interval_series brute_force_series(int m, int order, bool with_q = true)
{
    interval_series f(order);
    for (int n = 0; n <= order; ++n) {
        const auto h = build_hasse(m, n);
        poly_xyq coeff;
        for_each_interval(h, [&](const interval_record& r) {
            coeff.add_term({r.contacts_lower, r.initial_rise_upper, with_q ? r.longest_chain : 0}, 1);
        });
        f[n] = std::move(coeff);
    }
    return f;
}

// k-pointed intervals: t^n x^active y^rise.
inline interval_series brute_force_pointed_series(int m, int k, int order)
{
    interval_series g(order);
    for (int n = 0; n <= order; ++n) {
        const auto h = build_hasse(m, n);
        poly_xyq coeff;
        for_each_pointed_interval(h, k, [&](const pointed_interval& pi) {
            coeff.add_term({pi.active_contacts, pi.initial_rise, 0}, 1);
        });
        g[n] = std::move(coeff);
    }
    return g;
}

// ---------------------------------------------------------------------------
// Named checks, grouped in suites. Each check is exhaustive over its grid.

struct check_result {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct verify_options {
    int m_max = 3;
    int n_max = 0; // 0: desk-scale default per m
    int order = 6;
    int z_order = 20;
};

namespace detail {

inline int default_n_max(const verify_options& o, int m, int fallback_small, int fallback_large)
{
    if (o.n_max > 0) {
        return o.n_max;
    }
    return m <= 2 ? fallback_small : fallback_large;
}

template <class F>
check_result run_check(std::string name, F&& body)
{
    check_result r{std::move(name), false, {}};
    try {
        r.passed = body(r.detail);
    } catch (const error& e) {
        r.passed = false;
        r.detail = e.what();
    }
    return r;
}

inline std::string grid(int m, int n) { return "m=" + std::to_string(m) + " n=" + std::to_string(n); }

} // namespace detail

inline std::vector<check_result> verify_paths(const verify_options& o)
{
    std::vector<check_result> out;
    for (int m = 1; m <= o.m_max; ++m) {
        const int n_max = detail::default_n_max(o, m, 4, 4);
        out.push_back(detail::run_check("paths: ballot/Dyck round trip, m=" + std::to_string(m), [&](std::string& why) {
            for (int n = 0; n <= n_max; ++n) {
                for (const auto& p : generate_m_dyck(m, n)) {
                    if (!(ballot_to_dyck(dyck_to_ballot(p, m)) == p)) {
                        why = p.to_string();
                        return false;
                    }
                }
            }
            return true;
        }));
        out.push_back(detail::run_check("paths: m-reduction/m-expansion, m=" + std::to_string(m), [&](std::string& why) {
            for (int n = 1; n <= n_max; ++n) {
                for (const auto& p : generate_m_dyck(m, n)) {
                    const auto red = m_reduction(p, m);
                    if (!is_m_dyck(red.path, m) || !(m_expansion(red) == p)
                        || !(prepend_distance(distance_vector(red.path), red.points) == distance_vector(p))) {
                        why = p.to_string();
                        return false;
                    }
                }
            }
            return true;
        }));
        out.push_back(detail::run_check("paths: Fuss-Catalan counts, m=" + std::to_string(m), [&](std::string& why) {
            for (int n = 0; n <= std::max(n_max, 5); ++n) {
                if (m * n > step_path::max_size) {
                    break;
                }
                const auto paths = generate_m_dyck(m, n);
                if (integer(static_cast<unsigned long>(paths.size())) != count_paths(m, n)) {
                    why = detail::grid(m, n);
                    return false;
                }
                for (const auto& p : paths) {
                    const int c = contacts(p);
                    std::string flat;
                    for (int i = 0; i < n; ++i) {
                        flat += std::string(static_cast<std::size_t>(m), 'u') + std::string(static_cast<std::size_t>(m), 'd');
                    }
                    if (c > n + 1 || ((c == n + 1) != (p.to_string() == flat))) {
                        why = "contact bound at " + p.to_string();
                        return false;
                    }
                }
            }
            return true;
        }));
    }
    return out;
}

inline std::vector<check_result> verify_order(const verify_options& o)
{
    std::vector<check_result> out;
    for (int m = 1; m <= o.m_max; ++m) {
        const int n_max = detail::default_n_max(o, m, 4, 3);
        out.push_back(detail::run_check("order: distance vectors vs reachability, cover effect, below-ness, m=" + std::to_string(m),
                                        [&](std::string& why) {
            for (int n = 0; n <= n_max; ++n) {
                const auto h = build_hasse(m, n);
                const reachability reach(h);
                for (std::size_t a = 0; a < h.node_count(); ++a) {
                    for (std::size_t b = 0; b < h.node_count(); ++b) {
                        const bool le = leq(h.node(a), h.node(b));
                        if (le != reach.reaches(a, b) || (le && !is_below(h.node(a), h.node(b)))) {
                            why = h.node(a).to_string() + " vs " + h.node(b).to_string();
                            return false;
                        }
                    }
                    const auto& da = h.distances(a);
                    for (std::size_t c : h.covers_of(a)) {
                        const auto& dc = h.distances(c);
                        int changed = 0;
                        for (std::size_t i = 0; i < da.size(); ++i) {
                            changed += da.entries[i] != dc.entries[i] ? 1 : 0;
                        }
                        if (changed != 1) {
                            why = "cover changes " + std::to_string(changed) + " coordinates";
                            return false;
                        }
                    }
                }
            }
            return true;
        }));
        out.push_back(detail::run_check("order: reduction characterization, m=" + std::to_string(m), [&](std::string& why) {
            for (int n = 1; n <= n_max; ++n) {
                const auto h = build_hasse(m, n);
                std::vector<pointed_path> red;
                for (const auto& p : h.nodes()) {
                    red.push_back(m_reduction(p, m));
                }
                for (std::size_t a = 0; a < h.node_count(); ++a) {
                    for (std::size_t b = 0; b < h.node_count(); ++b) {
                        bool rhs = leq(red[a].path, red[b].path);
                        for (int i = 0; i < m && rhs; ++i) {
                            rhs = red[b].points[static_cast<std::size_t>(i)] >= red[a].points[static_cast<std::size_t>(i)];
                        }
                        if (rhs != h.leq(a, b)) {
                            why = h.node(a).to_string() + " vs " + h.node(b).to_string();
                            return false;
                        }
                    }
                }
            }
            return true;
        }));
    }
    return out;
}

inline std::vector<check_result> verify_lattice(const verify_options& o)
{
    std::vector<check_result> out;
    for (int m = 1; m <= o.m_max; ++m) {
        const int n_max = detail::default_n_max(o, m, 4, 3);
        out.push_back(detail::run_check("lattice: unique meet and join, m=" + std::to_string(m), [&](std::string&) {
            for (int n = 0; n <= n_max; ++n) {
                const auto h = build_hasse(m, n);
                const reachability reach(h);
                for (std::size_t a = 0; a < h.node_count(); ++a) {
                    for (std::size_t b = a; b < h.node_count(); ++b) {
                        (void)meet(reach, a, b);
                        (void)join(reach, a, b);
                    }
                }
            }
            return true;
        }));
    }
    return out;
}

// Cover edges of the diagram vs rotation edges of the (m+1)-ary trees.
inline bool rotation_graph_matches_covers(int m, int n, std::string& why)
{
    const auto h = build_hasse(m, n);
    std::set<std::pair<std::size_t, std::size_t>> cover_edges;
    std::set<std::pair<std::size_t, std::size_t>> rotation_edges;
    std::set<std::string> codes;
    for (std::size_t a = 0; a < h.node_count(); ++a) {
        for (std::size_t c : h.covers_of(a)) {
            cover_edges.emplace(a, c);
        }
        const auto t = tree_view(h.node(a), m);
        if (t.internal_count() != static_cast<std::size_t>(n) || !(tree_to_path(t) == h.node(a))) {
            why = "tree encoding of " + h.node(a).to_string();
            return false;
        }
        codes.insert(t.prefix_code());
        for (std::size_t site : rotation_sites(t)) {
            rotation_edges.emplace(a, h.index_of(tree_to_path(tree_rotate(t, site))));
        }
    }
    if (codes.size() != h.node_count()) {
        why = "tree encoding is not injective";
        return false;
    }
    if (cover_edges != rotation_edges) {
        why = "edge sets differ for " + detail::grid(m, n);
        return false;
    }
    return true;
}

inline std::vector<check_result> verify_trees(const verify_options& o)
{
    std::vector<check_result> out;
    for (int m = 1; m <= std::min(o.m_max, 2); ++m) {
        const int n_max = detail::default_n_max(o, m, 4, 4);
        out.push_back(detail::run_check("trees: rotation graph = cover graph, m=" + std::to_string(m), [&](std::string& why) {
            for (int n = 0; n <= n_max; ++n) {
                if (!rotation_graph_matches_covers(m, n, why)) {
                    return false;
                }
            }
            return true;
        }));
    }
    return out;
}

inline std::vector<check_result> verify_formulas(const verify_options& o)
{
    std::vector<check_result> out;
    out.push_back(detail::run_check("formulas: contact rows sum to interval counts (n <= 8)", [&](std::string& why) {
        for (int m = 1; m <= o.m_max; ++m) {
            for (int n = 1; n <= 8; ++n) {
                integer sum = 0;
                for (int i = 2; i <= n + 1; ++i) {
                    sum += count_by_contacts(m, n, i);
                }
                if (sum != count_intervals(m, n)) {
                    why = detail::grid(m, n);
                    return false;
                }
            }
        }
        return true;
    }));
    out.push_back(detail::run_check("formulas: i(i-1)P_m(n,i) vanishes at i=1, summands divisible by i", [&](std::string& why) {
        for (int m = 1; m <= std::max(o.m_max, 4); ++m) {
            for (int n = 1; n <= 8; ++n) {
                if (contact_polynomial_scaled(m, n, 1) != 0) {
                    why = "i=1 at " + detail::grid(m, n);
                    return false;
                }
                for (int i = 1; i <= n + 1; ++i) {
                    const auto parts = contact_polynomial_parts(m, n, i);
                    for (const rational& part : {parts.leading, parts.middle, parts.trailing}) {
                        const rational q = part / i;
                        if (q.get_den() != 1) {
                            why = "summand not divisible by i at " + detail::grid(m, n);
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    }));
    out.push_back(detail::run_check("formulas: m=1 specialization", [&](std::string& why) {
        for (int n = 1; n <= 30; ++n) {
            for (int i = 2; i <= n + 1; ++i) {
                if (count_by_contacts(1, n, i) != count_by_contacts_m1(n, i) || contact_polynomial(1, n, i) != 2) {
                    why = detail::grid(1, n);
                    return false;
                }
            }
        }
        return true;
    }));
    out.push_back(detail::run_check("formulas: contact counts vs exhaustive enumeration", [&](std::string& why) {
        for (int m = 1; m <= std::min(o.m_max, 2); ++m) {
            for (int n = 1; n <= detail::default_n_max(o, m, 4, 3); ++n) {
                const auto stats = interval_table(build_hasse(m, n));
                if (integer(static_cast<unsigned long>(stats.intervals)) != count_intervals(m, n)) {
                    why = "total at " + detail::grid(m, n);
                    return false;
                }
                for (int i = 2; i <= n + 1; ++i) {
                    const auto it = stats.by_contacts.find(i);
                    const unsigned long brute = it == stats.by_contacts.end() ? 0UL : static_cast<unsigned long>(it->second);
                    if (integer(brute) != count_by_contacts(m, n, i)) {
                        why = detail::grid(m, n) + " i=" + std::to_string(i);
                        return false;
                    }
                }
            }
        }
        return true;
    }));
    return out;
}

inline std::vector<check_result> verify_series(const verify_options& o)
{
    std::vector<check_result> out;
    for (int m = 1; m <= std::min(o.m_max, 2); ++m) {
        const int n_max = detail::default_n_max(o, m, 4, 3);
        out.push_back(detail::run_check("series: solved F(t;x,y,q) = exhaustive joint statistics, m=" + std::to_string(m),
                                        [&](std::string& why) {
            const auto solved = solve_f(m, n_max, {.with_y = true, .with_q = true});
            const auto brute = brute_force_series(m, n_max);
            for (int n = 0; n <= n_max; ++n) {
                if (!(solved[n] == brute[n])) {
                    why = "order " + std::to_string(n);
                    return false;
                }
            }
            return true;
        }));
    }
    for (int m = 1; m <= o.m_max; ++m) {
        out.push_back(detail::run_check("series: residual, integrality, degree bounds, m=" + std::to_string(m), [&](std::string& why) {
            const solve_options opts{.with_y = true, .with_q = true};
            const auto f = solve_f(m, o.order, opts);
            if (!functional_residual(f, m, opts).is_zero()) {
                why = "nonzero residual";
                return false;
            }
            for (int n = 0; n <= f.order(); ++n) {
                if (f[n].degree(var_x) > n + 1 || f[n].degree(var_y) > n) {
                    why = "degree bound at order " + std::to_string(n);
                    return false;
                }
                for (const auto& [e, c] : f[n].terms()) {
                    if (c < 0 || c.get_den() != 1) {
                        why = "coefficient " + c.get_str() + " at order " + std::to_string(n);
                        return false;
                    }
                }
            }
            return true;
        }));
    }
    return out;
}

inline std::vector<check_result> verify_symmetry(const verify_options& o)
{
    std::vector<check_result> out;
    for (int m = 1; m <= o.m_max; ++m) {
        out.push_back(detail::run_check("symmetry: yF(t;x,y) symmetric, m=" + std::to_string(m) + " order "
                                            + std::to_string(o.order),
                                        [&](std::string&) { return check_symmetry(solve_f(m, o.order, {.with_y = true})); }));
    }
    return out;
}

inline std::vector<check_result> verify_parametrization(const verify_options& o)
{
    std::vector<check_result> out;
    for (int m = 1; m <= o.m_max; ++m) {
        out.push_back(detail::run_check("parametrization: F(t;1,1), m=" + std::to_string(m),
                                        [&](std::string&) { return check_f11_parametrization(m, o.order); }));
    }
    for (int m = 1; m <= std::min(o.m_max, 2); ++m) {
        out.push_back(detail::run_check("parametrization: yF(t;x,y) at (2,3), m=" + std::to_string(m),
                                        [&](std::string&) { return check_full_parametrization(m, o.order, 2, 3); }));
    }
    return out;
}

inline std::vector<check_result> verify_identities(const verify_options& o)
{
    const int nz = o.z_order;
    std::vector<check_result> out;
    out.push_back(detail::run_check("identities: elementary Lambda evaluations (p <= 6)", [&](std::string& why) {
        for (int p = 1; p <= 6; ++p) {
            if (!verify_lambda_elem(p, nz)) {
                why = "p=" + std::to_string(p);
                return false;
            }
        }
        return true;
    }));
    out.push_back(detail::run_check("identities: Lambda^m(1/w^m) = (1-z)^m - w^m (m <= 6)", [&](std::string& why) {
        for (int m = 1; m <= 6; ++m) {
            if (!verify_lambda_inverse_power(m, nz)) {
                why = "m=" + std::to_string(m);
                return false;
            }
        }
        return true;
    }));
    out.push_back(detail::run_check("identities: general k-fold identity (k <= m <= 5)", [&](std::string& why) {
        for (int m = 1; m <= 5; ++m) {
            for (int k = 1; k <= m; ++k) {
                if (!verify_identity_k(m, k, nz)) {
                    why = "m=" + std::to_string(m) + " k=" + std::to_string(k);
                    return false;
                }
            }
        }
        return true;
    }));
    out.push_back(detail::run_check("identities: final identity and its v=0 case (m <= 3)", [&](std::string& why) {
        for (int m = 1; m <= 3; ++m) {
            if (!verify_final_id(m, nz)) {
                why = "m=" + std::to_string(m);
                return false;
            }
        }
        return true;
    }));
    out.push_back(detail::run_check("identities: symmetric form of Lambda^k H (k <= m <= 2)", [&](std::string& why) {
        for (int m = 1; m <= 2; ++m) {
            if (!verify_sym_form_iterates(m, nz)) {
                why = "m=" + std::to_string(m);
                return false;
            }
        }
        return true;
    }));
    out.push_back(detail::run_check("identities: Lagrange coefficients of the kernel root (N=10)",
                                    [&](std::string&) { return verify_kernel_lagrange(10); }));
    out.push_back(detail::run_check("identities: terminal hypergeometric sum (m-i <= 8)", [&](std::string& why) {
        for (int d = 2; d <= 8; ++d) {
            for (int p = 1; p <= d; ++p) {
                if (!verify_hypergeometric(d, 0, p)) {
                    why = "m-i=" + std::to_string(d) + " p=" + std::to_string(p);
                    return false;
                }
            }
        }
        return true;
    }));
    out.push_back(detail::run_check("identities: telescoping binomial sum", [&](std::string& why) {
        for (int a = -6; a <= 6; ++a) {
            for (int b = 0; b <= 6; ++b) {
                for (int r2 = -12; r2 <= 12; ++r2) {
                    for (int r1 = -12; r1 <= r2; ++r1) {
                        if (!verify_telescoping(a, b, r1, r2)) {
                            why = "a=" + std::to_string(a) + " b=" + std::to_string(b);
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    }));
    return out;
}

inline std::vector<check_result> verify_pointed(const verify_options& o)
{
    std::vector<check_result> out;
    for (int m = 1; m <= std::min(o.m_max, 2); ++m) {
        const int n_max = o.n_max > 0 ? o.n_max : 3;
        out.push_back(detail::run_check("pointed: G^(k+1) = F(x,1) Delta G^(k), m=" + std::to_string(m), [&](std::string& why) {
            const auto f = brute_force_pointed_series(m, 0, n_max);
            const auto f1 = f.map([](const poly_xyq& p) { return p.substitute(var_y, 1); });
            for (int k = 0; k < m; ++k) {
                const auto g = brute_force_pointed_series(m, k, n_max);
                const auto next = brute_force_pointed_series(m, k + 1, n_max);
                const auto rhs = f1 * g.map([](const poly_xyq& p) { return delta(p); });
                if (!(next == rhs)) {
                    why = "k=" + std::to_string(k);
                    return false;
                }
            }
            return true;
        }));
        out.push_back(detail::run_check("pointed: F = x + x y t G^(m), m=" + std::to_string(m), [&](std::string& why) {
            const auto f = brute_force_series(m, n_max, false);
            const auto g = brute_force_pointed_series(m, m, n_max);
            interval_series rhs = (g * poly_xyq::monomial({1, 1, 0})).shifted(1);
            rhs[0] += poly_xyq::variable(var_x);
            if (!(f == rhs)) {
                why = "mismatch";
                return false;
            }
            return true;
        }));
    }
    return out;
}

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"paths",    "order",           "lattice",    "trees",  "formulas",
                                                "series",   "symmetry",        "parametrization", "identities",
                                                "pointed"};
    return names;
}

inline std::vector<check_result> run_suite(const std::string& suite, const verify_options& o)
{
    using runner = std::vector<check_result> (*)(const verify_options&);
    static const std::map<std::string, runner> suites{
        {"paths", verify_paths},       {"order", verify_order},       {"lattice", verify_lattice},
        {"trees", verify_trees},       {"formulas", verify_formulas}, {"series", verify_series},
        {"symmetry", verify_symmetry}, {"parametrization", verify_parametrization},
        {"identities", verify_identities}, {"pointed", verify_pointed}};
    if (suite == "all") {
        std::vector<check_result> all;
        for (const auto& name : suite_names()) {
            auto part = suites.at(name)(o);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    const auto it = suites.find(suite);
    if (it == suites.end()) {
        throw invalid_input("unknown suite '" + suite + "'");
    }
    return it->second(o);
}

} // namespace mtamari
