#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "truncated_series.hpp"

namespace mtamari {

// Coefficients of interval series: x marks contacts of the lower path, y the
// initial rise of the upper path, q the longest chain.
using poly_xyq = polynomial<3>;
using interval_series = truncated_series<poly_xyq>;
using rational_series = truncated_series<rational>;

inline constexpr std::size_t var_x = 0;
inline constexpr std::size_t var_y = 1;
inline constexpr std::size_t var_q = 2;

// (S(x) - S(1)) / (x - 1); y and q are spectators.
inline poly_xyq delta(const poly_xyq& s)
{
    poly_xyq out;
    for (const auto& [e, c] : s.terms()) {
        for (int j = 0; j < e[var_x]; ++j) {
            out.add_term({j, e[var_y], e[var_q]}, c);
        }
    }
    return out;
}

// (S(qx) - S(1)) / (qx - 1): x^k contributes sum_{j<k} q^j x^j.
inline poly_xyq delta_q(const poly_xyq& s)
{
    poly_xyq out;
    for (const auto& [e, c] : s.terms()) {
        for (int j = 0; j < e[var_x]; ++j) {
            out.add_term({j, e[var_y], e[var_q] + j}, c);
        }
    }
    return out;
}

struct solve_options {
    bool with_y = false;
    bool with_q = false;
};

/// Solves F(x,y) = x + x y t (F(x,1) . Delta)^m (F(x,y)) through order N in
/// t. Each order of F is extracted once: [t^{j+1}]F needs only the operator
/// iterates at order j, which in turn need F up to order j.
inline interval_series solve_f(int m, int order, solve_options opts = {})
{
    if (m < 1) {
        throw invalid_input("m must be positive");
    }
    if (order < 0) {
        throw invalid_input("order must be nonnegative");
    }
    const auto diff = [&](const poly_xyq& p) { return opts.with_q ? delta_q(p) : delta(p); };
    const poly_xyq x = poly_xyq::variable(var_x);
    const poly_xyq xy = opts.with_y ? poly_xyq::monomial({1, 1, 0}) : x;

    interval_series f(order);
    f[0] = x;
    std::vector<poly_xyq> f_y1;                               // F(x,1) by order
    std::vector<std::vector<poly_xyq>> diffed(static_cast<std::size_t>(m)); // Delta G^(k) by order
    for (int j = 0; j < order; ++j) {
        f_y1.push_back(opts.with_y ? f[j].substitute(var_y, 1) : f[j]);
        poly_xyq g = f[j]; // G^(0) at order j
        for (int k = 0; k < m; ++k) {
            diffed[static_cast<std::size_t>(k)].push_back(diff(g));
            poly_xyq next;
            for (int a = 0; a <= j; ++a) {
                next += f_y1[static_cast<std::size_t>(a)] * diffed[static_cast<std::size_t>(k)][static_cast<std::size_t>(j - a)];
            }
            g = std::move(next);
        }
        f[j + 1] = xy * g;
    }
    return f;
}

// F - x - x y t (F(x,1) . Delta)^m F, evaluated with whole-series arithmetic.
inline interval_series functional_residual(const interval_series& f, int m, solve_options opts = {})
{
    const int order = f.order();
    const auto f1 = opts.with_y ? f.map([](const poly_xyq& p) { return p.substitute(var_y, 1); }) : f;
    interval_series g = f;
    for (int k = 0; k < m; ++k) {
        g = f1 * g.map([&](const poly_xyq& p) { return opts.with_q ? delta_q(p) : delta(p); });
    }
    const poly_xyq xy = opts.with_y ? poly_xyq::monomial({1, 1, 0}) : poly_xyq::variable(var_x);
    interval_series rhs = (g * xy).shifted(1);
    rhs[0] += poly_xyq::variable(var_x);
    return f - rhs.truncated(order);
}

// Is y * [t^n]F invariant under x <-> y for every n?
inline bool check_symmetry(const interval_series& f)
{
    const poly_xyq y = poly_xyq::variable(var_y);
    for (int n = 0; n <= f.order(); ++n) {
        const poly_xyq yf = y * f[n];
        if (!(yf == yf.swap_variables(var_x, var_y))) {
            return false;
        }
    }
    return true;
}

inline rational_series evaluate(const interval_series& f, const rational& x, const rational& y, const rational& q)
{
    return f.map([&](const poly_xyq& p) { return p.evaluate({x, y, q}); });
}

/// z(t) with t = z (1 - z)^{m^2 + 2m}, as a fixed point z = t (1 - z)^{-(m^2+2m)};
/// every pass fixes one more coefficient.
inline rational_series invert_t_to_z(int m, int order)
{
    if (m < 1) {
        throw invalid_input("m must be positive");
    }
    const int e = m * m + 2 * m;
    rational_series z(order);
    const rational_series one = rational_series::constant(1, order);
    for (int pass = 0; pass < order; ++pass) {
        z = (one - z).pow(-e).shifted(1);
    }
    return z;
}

// F(t;1,1) = (1 - (m+1) z) / (1 - z)^{m+2} after substituting z = z(t).
inline rational_series f11_closed_form(int m, int order)
{
    const rational_series one = rational_series::constant(1, order);
    const rational_series z = rational_series::variable(order);
    const rational_series in_z = (one - z * rational(m + 1)) * (one - z).pow(-(m + 2));
    return in_z.compose(invert_t_to_z(m, order));
}

inline bool check_f11_parametrization(int m, int order)
{
    const rational_series direct = evaluate(solve_f(m, order), 1, 1, 1);
    return direct == f11_closed_form(m, order);
}

// Solves x0 = (1 + u) / (1 + z u)^{m+1} for u as a series in z, u(0) = x0 - 1.
inline rational_series solve_u(int m, const rational& x0, int order)
{
    const rational_series one = rational_series::constant(1, order);
    rational_series u = rational_series::constant(x0 - 1, order);
    for (int pass = 0; pass < order; ++pass) {
        u = (one + u.shifted(1)).pow(m + 1) * x0 - one;
    }
    return u;
}

// Right side of the rational parametrization of y F(t;x,y) at x = x0, y = y0,
// as a series in t.
inline rational_series parametrized_yf(int m, int order, const rational& x0, const rational& y0)
{
    if (x0 == y0) {
        throw degenerate_evaluation("x0 = y0 hits the removable pole of 1/(u - v)");
    }
    const rational_series one = rational_series::constant(1, order);
    const rational_series z = rational_series::variable(order);
    const rational_series u = solve_u(m, x0, order);
    const rational_series v = solve_u(m, y0, order);
    const rational_series zu = u.shifted(1);
    const rational_series zv = v.shifted(1);
    const rational_series numer = (one + u) * (one + zu) * (one + v) * (one + zv);
    const rational_series denom_inv
        = (u - v).inverse() * (one - zu * v).inverse() * (one - z).pow(-(m + 2));
    const rational_series bracket = (one + u) * (one + zu).pow(-(m + 1)) - (one + v) * (one + zv).pow(-(m + 1));
    const rational_series in_z = numer * denom_inv * bracket;
    return in_z.compose(invert_t_to_z(m, order));
}

inline bool check_full_parametrization(int m, int order, const rational& x0, const rational& y0)
{
    const rational_series rhs = parametrized_yf(m, order, x0, y0);
    const rational_series lhs = evaluate(solve_f(m, order, {.with_y = true}), x0, y0, 1) * y0;
    return lhs == rhs;
}

} // namespace mtamari
