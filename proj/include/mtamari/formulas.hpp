#pragma once

#include <string>

#include <gmpxx.h>

#include "errors.hpp"
#include "polynomial.hpp"

namespace mtamari {

// Generalized binomial: C(a,b) = a (a-1) ... (a-b+1) / b! for b >= 0 (any
// integer a), and 0 for b < 0.
inline integer binomial(long a, long b)
{
    if (b < 0) {
        return 0;
    }
    if (a >= 0) {
        if (b > a) {
            return 0;
        }
        integer r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
        return r;
    }
    // C(a,b) = (-1)^b C(b-a-1, b) for negative a.
    integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(b - a - 1), static_cast<unsigned long>(b));
    return (b % 2 == 0) ? r : integer(-r);
}

inline integer factorial(long n)
{
    if (n < 0) {
        throw out_of_range("factorial of a negative number");
    }
    integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

namespace detail {

inline integer exact_quotient(const integer& num, const integer& den, const char* what)
{
    if (den == 0 || num % den != 0) {
        throw non_integral(std::string(what) + ": " + num.get_str() + " / " + den.get_str() + " is not an integer");
    }
    return num / den;
}

inline integer require_integer(const rational& q, const char* what)
{
    if (q.get_den() != 1) {
        throw non_integral(std::string(what) + ": " + q.get_str() + " is not an integer");
    }
    return q.get_num();
}

inline void require_params(long m, long n)
{
    if (m < 1 || n < 1) {
        throw out_of_range("need m >= 1 and n >= 1");
    }
}

} // namespace detail

// Fuss-Catalan number: m-Dyck paths of size mn.
inline integer count_paths(long m, long n)
{
    if (m < 1 || n < 0) {
        throw out_of_range("need m >= 1 and n >= 0");
    }
    return detail::exact_quotient(binomial((m + 1) * n, n), m * n + 1, "Fuss-Catalan number");
}

// Number of intervals of the m-Tamari lattice of size n.
inline integer count_intervals(long m, long n)
{
    detail::require_params(m, n);
    const long mb = m + 1;
    return detail::exact_quotient(mb * binomial(mb * mb * n + m, n - 1), integer(n) * (m * n + 1),
                                  "interval count");
}

// The three summands whose sum is i(i-1) P_m(n,i).
struct contact_polynomial_terms {
    rational leading;
    rational middle; // k-sum, empty for m <= 2
    rational trailing;

    rational total() const { return leading + middle + trailing; }
};

inline contact_polynomial_terms contact_polynomial_parts(long m, long n, long i)
{
    const long mb = m + 1;
    contact_polynomial_terms t;
    const integer leading = factorial(mb) * factorial(m - 1) * (n - i + 1) * binomial(i * mb, m)
                            * binomial(n * m * (m + 2) - i * m + 2 * m, m - 1);
    t.leading = -rational(leading);
    t.middle = 0;
    for (long k = 1; k <= m - 2; ++k) {
        const integer fk = factorial(k);
        integer term = k * fk * fk * factorial(m - k - 2) * factorial(m - k - 1);
        term *= integer((i + 1) * m * mb + 2 * mb + k) * (n - i) * (n - i + 1);
        term *= binomial(i * mb - k - 1, m - k - 1) * binomial(i * m, k);
        term *= binomial(n * mb * mb - i * mb + m + k, k) * binomial(n * m * (m + 2) - i * m + 2 * m, m - k - 2);
        t.middle += rational(term);
    }
    const integer fm = factorial(m);
    const integer first = i * binomial(n * mb * mb - i * mb + 2 * m, m);
    const integer second = integer((m - 1) * (i * mb + 2) * (n - i + 1)) * binomial(n * mb * mb - i * mb + 2 * m - 1, m - 1);
    const rational inner = rational(first) - rational(second) / m;
    const integer scale = fm * fm * binomial(i * m, m - 1);
    t.trailing = rational(scale) * inner;
    return t;
}

// i(i-1) P_m(n,i), asserted integral.
inline integer contact_polynomial_scaled(long m, long n, long i)
{
    return detail::require_integer(contact_polynomial_parts(m, n, i).total(), "i(i-1) P_m(n,i)");
}

// P_m(n,i) for i >= 2, asserting divisibility by i(i-1).
inline integer contact_polynomial(long m, long n, long i)
{
    if (i < 2) {
        throw out_of_range("P_m(n,i) is defined through i(i-1) P_m(n,i) only for i >= 2");
    }
    return detail::exact_quotient(contact_polynomial_scaled(m, n, i), integer(i) * (i - 1), "P_m(n,i)");
}

// Intervals whose lower path has exactly i contacts, 2 <= i <= n+1.
inline integer count_by_contacts(long m, long n, long i)
{
    detail::require_params(m, n);
    if (i < 2 || i > n + 1) {
        throw out_of_range("contact count " + std::to_string(i) + " outside 2.." + std::to_string(n + 1));
    }
    const long mb = m + 1;
    const integer num = factorial(n * mb * mb - i * mb + m) * factorial(i * mb - m) * contact_polynomial(m, n, i);
    const integer den = factorial(n * mb * mb - n - i * m + 2 * m) * factorial(n - i + 1) * factorial(m * i)
                        * factorial(i - 2);
    return detail::exact_quotient(num, den, "interval count by contacts");
}

// The m = 1 specialization (i-1)(4n-2i+1)! / ((3n-i+2)! (n-i+1)!) C(2i,i).
inline integer count_by_contacts_m1(long n, long i)
{
    detail::require_params(1, n);
    if (i < 2 || i > n + 1) {
        throw out_of_range("contact count outside 2..n+1");
    }
    return detail::exact_quotient(integer(i - 1) * factorial(4 * n - 2 * i + 1) * binomial(2 * i, i),
                                  factorial(3 * n - i + 2) * factorial(n - i + 1), "m = 1 contact count");
}

} // namespace mtamari
