#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "formulas.hpp"
#include "polynomial.hpp"
#include "truncated_series.hpp"

namespace mtamari {

// Series in z whose coefficients are polynomials in u and v. The operator
// identities below are all checked in this ring at a fixed z-truncation.
using poly_uv = polynomial<2>;
using z_series = truncated_series<poly_uv>;

inline constexpr std::size_t var_u = 0;
inline constexpr std::size_t var_v = 1;

// (1 + z u)^p, or (1 + z v)^p with var = var_v; p may be negative.
inline z_series w_power(int p, int order, std::size_t var = var_u)
{
    return z_series::linear(poly_uv(1), poly_uv::variable(var), order).pow(p);
}

inline z_series z_linear(const rational& a, const rational& b, int order)
{
    return z_series::linear(poly_uv(a), poly_uv(b), order);
}

// Lambda H = (1 + u)(1 + z u)(H(u,v) - H(0,v)) / u, exact at the same order.
inline z_series lambda(const z_series& h)
{
    const int order = h.order();
    std::vector<poly_uv> quotient;
    quotient.reserve(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        quotient.push_back(h[k].drop_constant_in(var_u).shift(var_u, -1));
    }
    const poly_uv one_plus_u = poly_uv(1) + poly_uv::variable(var_u);
    z_series out(order);
    for (int k = 0; k <= order; ++k) {
        poly_uv c = quotient[static_cast<std::size_t>(k)];
        if (k > 0) {
            c += quotient[static_cast<std::size_t>(k - 1)].shift(var_u, 1);
        }
        out[k] = one_plus_u * c;
    }
    return out;
}

inline z_series lambda_power(z_series h, int k)
{
    for (int i = 0; i < k; ++i) {
        h = lambda(h);
    }
    return h;
}

// The three elementary evaluations: Lambda(1/w^p), Lambda(1), Lambda(w^p).
inline bool verify_lambda_elem(int p, int order)
{
    if (p < 1) {
        throw out_of_range("p must be at least 1");
    }
    const z_series z = z_series::variable(order);
    const z_series one = z_series::constant(1, order);
    const z_series w = w_power(1, order);

    z_series neg_rhs = (one - z) * w_power(-(p - 1), order) - w;
    for (int a = 0; a <= p - 2; ++a) {
        neg_rhs -= z * w_power(-a, order);
    }
    const bool negative = lambda(w_power(-p, order)) == neg_rhs;

    const bool unit = lambda(one).is_zero();

    z_series pos_rhs = (z - one) * w + w_power(p + 1, order);
    for (int a = 2; a <= p; ++a) {
        pos_rhs += z * w_power(a, order);
    }
    const bool positive = lambda(w_power(p, order)) == pos_rhs;
    return negative && unit && positive;
}

// Lambda^m (1/w^m) = (1 - z)^m - w^m.
inline bool verify_lambda_inverse_power(int m, int order)
{
    if (m < 1) {
        throw out_of_range("m must be positive");
    }
    const z_series lhs = lambda_power(w_power(-m, order), m);
    const z_series rhs = z_linear(1, -1, order).pow(m) - w_power(m, order);
    return lhs == rhs;
}

// Closed form of Lambda^k (1/w^m) for 1 <= k <= m.
inline z_series identity_k_rhs(int m, int k, int order)
{
    const z_series z = z_series::variable(order);
    z_series rhs = z_linear(1, -1, order).pow(k) * w_power(-(m - k), order) - w_power(k, order);
    for (int i = k; i <= m - 1; ++i) {
        for (int j = 1; j <= k; ++j) {
            const integer c = binomial(k, j - 1) * binomial(i - j + 1, k - j);
            const rational sign = ((k + j) % 2 == 0) ? 1 : -1;
            rhs -= (z.pow(k - j + 1) * w_power(-(m - i - 1), order)) * poly_uv(sign * rational(c));
        }
    }
    for (int i = 1; i <= k - 1; ++i) {
        for (int j = 1; j <= i; ++j) {
            const integer c = binomial(i - 1, j - 1) * binomial(m - k + j - 1, j);
            const rational sign = ((j - 1) % 2 == 0) ? 1 : -1;
            rhs += (z.pow(j) * w_power(k - i, order)) * poly_uv(sign * rational(c));
        }
    }
    return rhs;
}

inline bool verify_identity_k(int m, int k, int order)
{
    if (k < 1 || k > m) {
        throw out_of_range("need 1 <= k <= m");
    }
    return lambda_power(w_power(-m, order), k) == identity_k_rhs(m, k, order);
}

inline z_series divide_coefficients(const z_series& s, const poly_uv& d)
{
    return s.map([&](const poly_uv& c) { return exact_divide(c, d); });
}

/// H(u,v) = (1+u)(1+zu)(1+v)(1+zv) / ((u-v)(1-zuv)) * ((1+u)/w_u^{m+1} - (1+v)/w_v^{m+1}).
/// The division by (u - v) is exact per z-coefficient and is checked.
inline z_series h_series(int m, int order)
{
    const poly_uv u = poly_uv::variable(var_u);
    const poly_uv v = poly_uv::variable(var_v);
    const poly_uv one(1);
    const z_series bracket
        = w_power(-(m + 1), order, var_u) * (one + u) - w_power(-(m + 1), order, var_v) * (one + v);
    const z_series quotient = divide_coefficients(bracket, u - v);
    const z_series one_minus_zuv = z_series::linear(one, -(u * v), order);
    return quotient * w_power(1, order, var_u) * w_power(1, order, var_v) * ((one + u) * (one + v))
           * one_minus_zuv.inverse();
}

inline bool is_symmetric_uv(const z_series& h)
{
    for (int k = 0; k <= h.order(); ++k) {
        if (!(h[k] == h[k].swap_variables(var_u, var_v))) {
            return false;
        }
    }
    return true;
}

// z Lambda^m H = w_u^{m+1} w_v^{m+1} H / ((1+u)(1+v)) - (1 - z)^{m+2}.
inline bool verify_final_id_full(int m, int order)
{
    const poly_uv u = poly_uv::variable(var_u);
    const poly_uv v = poly_uv::variable(var_v);
    const poly_uv one(1);
    const z_series h = h_series(m, order);
    const z_series lhs = lambda_power(h, m).shifted(1);
    const z_series scaled = w_power(m + 1, order, var_u) * w_power(m + 1, order, var_v) * h;
    const z_series rhs = divide_coefficients(scaled, (one + u) * (one + v)) - z_linear(1, -1, order).pow(m + 2);
    return lhs == rhs;
}

// The v = 0 case: z Lambda^{m+1}((1+u)/w^{m+1}) = w((1+u) - w^{m+1})/u - (1-z)^{m+2}.
inline bool verify_final_id_simple(int m, int order)
{
    const poly_uv u = poly_uv::variable(var_u);
    const poly_uv one(1);
    const z_series lhs = lambda_power(w_power(-(m + 1), order) * (one + u), m + 1).shifted(1);
    const z_series numer = z_series::constant(one + u, order) - w_power(m + 1, order);
    const z_series rhs = divide_coefficients(numer, u) * w_power(1, order) - z_linear(1, -1, order).pow(m + 2);
    return lhs == rhs;
}

inline bool verify_final_id(int m, int order)
{
    if (m < 1) {
        throw out_of_range("m must be positive");
    }
    return is_symmetric_uv(h_series(m, order)) && verify_final_id_full(m, order) && verify_final_id_simple(m, order);
}

/// Checks H(u,v) (u-v)(1-zuv) = u(1+v)(1+zv) H(u,0) - v(1+u)(1+zu) H(v,0),
/// the cleared-denominator form of the symmetric shape.
inline bool verify_sym_form(const z_series& h, int order)
{
    const z_series hh = h.truncated(order);
    const int n = hh.order();
    const poly_uv u = poly_uv::variable(var_u);
    const poly_uv v = poly_uv::variable(var_v);
    const poly_uv one(1);
    const z_series h_u0 = hh.map([](const poly_uv& c) { return c.substitute(var_v, 0); });
    const z_series h_v0 = h_u0.map([](const poly_uv& c) { return c.swap_variables(var_u, var_v); });
    const z_series lhs = hh * z_series::constant(u - v, n) * z_series::linear(one, -(u * v), n);
    const z_series rhs = h_u0 * w_power(1, n, var_v) * (u * (one + v)) - h_v0 * w_power(1, n, var_u) * (v * (one + u));
    return lhs == rhs;
}

// The H of the parametrization and its first m images under Lambda.
inline bool verify_sym_form_iterates(int m, int order)
{
    z_series h = h_series(m, order);
    for (int k = 0; k <= m; ++k) {
        if (!verify_sym_form(h, order)) {
            return false;
        }
        h = lambda(h);
    }
    return true;
}

// ---------------------------------------------------------------------------
// Kernel-method series S(t,z): the root of 1 - tz/(1-S) - t/S = 0 with
// S(0) = 0, i.e. S = t + S^2 + t(z - 1)S, expanded order by order.

using poly_z = polynomial<1>;
using tz_series = truncated_series<poly_z>;

inline tz_series kernel_root(int order)
{
    const poly_z z_minus_1 = poly_z::variable(0) - poly_z(1);
    tz_series s(order);
    for (int n = 1; n <= order; ++n) {
        poly_z c = n == 1 ? poly_z(1) : poly_z();
        for (int a = 1; a < n; ++a) {
            c += s[a] * s[n - a];
        }
        c += z_minus_1 * s[n - 1];
        s[n] = c;
    }
    return s;
}

// Lagrange-inversion closed form of [t^n] S^k (S - 1), n >= 1, k >= 0.
inline poly_z kernel_power_coefficient(int n, int k)
{
    if (n < k) {
        return {};
    }
    if (n == k) {
        return poly_z(-1);
    }
    if (n == k + 1) {
        return poly_z(1) - poly_z::variable(0) * rational(k);
    }
    poly_z out;
    for (int p = 1; p <= n - k; ++p) {
        rational c(binomial(n, p) * binomial(n - k - 1, p - 1) * (n - p - k * p));
        c /= rational(integer(n) * (n - k - 1));
        out.add_term({p}, c);
    }
    return out;
}

inline bool verify_kernel_lagrange(int max_n)
{
    if (max_n < 2) {
        throw out_of_range("need N >= 2");
    }
    const tz_series s = kernel_root(max_n);
    const tz_series s_minus_1 = s - tz_series::constant(poly_z(1), max_n);
    for (int k = 0; k <= max_n + 2; ++k) {
        const tz_series lhs = s.pow(k) * s_minus_1;
        for (int n = 1; n <= max_n; ++n) {
            if (!(lhs[n] == kernel_power_coefficient(n, k))) {
                return false;
            }
        }
    }
    return true;
}

// sum_{j=0}^{d-2} 1/(j+1) C(j+1,p) C(d-j-1,p-1) (j+1 - p(2j+2-d)) / (d-j-1), d = m - i.
inline rational hypergeometric_sum(int d, int p)
{
    rational sum = 0;
    for (int j = 0; j <= d - 2; ++j) {
        rational term(binomial(j + 1, p) * binomial(d - j - 1, p - 1) * (j + 1 - p * (2 * j + 2 - d)));
        term /= rational(integer(j + 1) * (d - j - 1));
        sum += term;
    }
    return sum;
}

inline bool verify_hypergeometric(int m, int i, int p)
{
    const int d = m - i;
    if (d < 2 || p < 1 || p > d) {
        throw out_of_range("need m - i >= 2 and 1 <= p <= m - i");
    }
    return hypergeometric_sum(d, p) == rational(p == 1 ? d - 1 : 0);
}

// sum_{r=r1}^{r2} C(r-a, b) = (r2+1-a-b)/(b+1) C(r2+1-a, b) - (r1-a-b)/(b+1) C(r1-a, b).
inline bool verify_telescoping(int a, int b, int r1, int r2)
{
    integer lhs = 0;
    for (int r = r1; r <= r2; ++r) {
        lhs += binomial(r - a, b);
    }
    rational rhs = rational(integer(r2 + 1 - a - b) * binomial(r2 + 1 - a, b)) / (b + 1)
                   - rational(integer(r1 - a - b) * binomial(r1 - a, b)) / (b + 1);
    return rational(lhs) == rhs;
}

} // namespace mtamari
