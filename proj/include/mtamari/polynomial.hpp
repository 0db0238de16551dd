#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace mtamari {

using rational = mpq_class;
using integer = mpz_class;

// Sparse polynomial in N variables over exact rationals. Terms with a zero
// coefficient are never stored, so structural equality is mathematical
// equality.
template <std::size_t N>
class polynomial {
public:
    using exponents = std::array<int, N>;
    using term_map = std::map<exponents, rational>;

    polynomial() = default;

    polynomial(const rational& c)
    {
        if (c != 0) {
            terms_.emplace(exponents{}, c);
        }
    }

    polynomial(long c) : polynomial(rational(c)) {}
    polynomial(int c) : polynomial(rational(c)) {}

    static polynomial monomial(const exponents& e, const rational& c = 1)
    {
        polynomial p;
        p.add_term(e, c);
        return p;
    }

    static polynomial variable(std::size_t var, int power = 1)
    {
        exponents e{};
        e[var] = power;
        return monomial(e);
    }

    const term_map& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    bool is_constant() const noexcept
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == exponents{});
    }

    rational coeff(const exponents& e) const
    {
        const auto it = terms_.find(e);
        return it == terms_.end() ? rational(0) : it->second;
    }

    rational constant_term() const { return coeff(exponents{}); }

    int degree(std::size_t var) const
    {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            d = std::max(d, e[var]);
        }
        return d;
    }

    int min_degree(std::size_t var) const
    {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            d = d < 0 ? e[var] : std::min(d, e[var]);
        }
        return d;
    }

    void add_term(const exponents& e, const rational& c)
    {
        if (c == 0) {
            return;
        }
        for (int x : e) {
            if (x < 0) {
                throw invalid_input("negative exponent in polynomial term");
            }
        }
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    // Replace variable `var` by the rational value `value`.
    polynomial substitute(std::size_t var, const rational& value) const
    {
        polynomial out;
        std::vector<rational> powers{rational(1)};
        for (const auto& [e, c] : terms_) {
            while (static_cast<int>(powers.size()) <= e[var]) {
                powers.push_back(powers.back() * value);
            }
            exponents f = e;
            f[var] = 0;
            out.add_term(f, c * powers[static_cast<std::size_t>(e[var])]);
        }
        return out;
    }

    // Evaluate every variable; the result is a rational number.
    rational evaluate(const std::array<rational, N>& values) const
    {
        rational sum = 0;
        for (const auto& [e, c] : terms_) {
            rational term = c;
            for (std::size_t v = 0; v < N; ++v) {
                for (int k = 0; k < e[v]; ++k) {
                    term *= values[v];
                }
            }
            sum += term;
        }
        return sum;
    }

    polynomial swap_variables(std::size_t a, std::size_t b) const
    {
        polynomial out;
        for (const auto& [e, c] : terms_) {
            exponents f = e;
            std::swap(f[a], f[b]);
            out.terms_.emplace(f, c);
        }
        return out;
    }

    // Multiply by var^shift (shift may be negative if every term allows it).
    polynomial shift(std::size_t var, int by) const
    {
        polynomial out;
        for (const auto& [e, c] : terms_) {
            exponents f = e;
            f[var] += by;
            if (f[var] < 0) {
                throw non_divisible("shift would create a negative exponent");
            }
            out.terms_.emplace(f, c);
        }
        return out;
    }

    // Terms whose exponent in `var` is nonzero, i.e. p - p|_{var=0}.
    polynomial drop_constant_in(std::size_t var) const
    {
        polynomial out;
        for (const auto& [e, c] : terms_) {
            if (e[var] != 0) {
                out.terms_.emplace(e, c);
            }
        }
        return out;
    }

    polynomial& operator+=(const polynomial& o)
    {
        for (const auto& [e, c] : o.terms_) {
            add_term(e, c);
        }
        return *this;
    }

    polynomial& operator-=(const polynomial& o)
    {
        for (const auto& [e, c] : o.terms_) {
            add_term(e, -c);
        }
        return *this;
    }

    polynomial& operator*=(const rational& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) {
            c *= s;
        }
        return *this;
    }

    friend polynomial operator+(polynomial a, const polynomial& b) { return a += b; }
    friend polynomial operator-(polynomial a, const polynomial& b) { return a -= b; }
    friend polynomial operator-(polynomial a)
    {
        for (auto& [e, c] : a.terms_) {
            c = -c;
        }
        return a;
    }
    friend polynomial operator*(polynomial a, const rational& s) { return a *= s; }
    friend polynomial operator*(const rational& s, polynomial a) { return a *= s; }

    friend polynomial operator*(const polynomial& a, const polynomial& b)
    {
        polynomial out;
        if (a.is_zero() || b.is_zero()) {
            return out;
        }
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                exponents e;
                for (std::size_t v = 0; v < N; ++v) {
                    e[v] = ea[v] + eb[v];
                }
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    polynomial& operator*=(const polynomial& o) { return *this = *this * o; }

    friend bool operator==(const polynomial& a, const polynomial& b) { return a.terms_ == b.terms_; }

private:
    term_map terms_;
};

// Exact division; throws non_divisible when the remainder is nonzero. Uses the
// lexicographic leading term, for which a single-divisor division has zero
// remainder exactly when the divisor divides.
template <std::size_t N>
polynomial<N> exact_divide(polynomial<N> p, const polynomial<N>& d)
{
    if (d.is_zero()) {
        throw non_divisible("division by the zero polynomial");
    }
    const auto& [lead_d, lead_c] = *d.terms().rbegin();
    polynomial<N> quotient;
    while (!p.is_zero()) {
        const auto& [lead_p, lead_pc] = *p.terms().rbegin();
        typename polynomial<N>::exponents e;
        for (std::size_t v = 0; v < N; ++v) {
            e[v] = lead_p[v] - lead_d[v];
            if (e[v] < 0) {
                throw non_divisible("polynomial division leaves a remainder");
            }
        }
        const rational c = lead_pc / lead_c;
        const auto step = polynomial<N>::monomial(e, c);
        quotient += step;
        p -= step * d;
    }
    return quotient;
}

template <std::size_t N>
polynomial<N> pow(const polynomial<N>& base, int e)
{
    if (e < 0) {
        throw invalid_input("negative power of a polynomial");
    }
    polynomial<N> result(1);
    for (int i = 0; i < e; ++i) {
        result *= base;
    }
    return result;
}

// Human-readable form with the given variable names, e.g. "3*x^2*y + 1".
template <std::size_t N>
std::string to_string(const polynomial<N>& p, const std::array<const char*, N>& names)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t v = 0; v < N; ++v) {
            if (e[v] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += "*";
            }
            mono += names[v];
            if (e[v] > 1) {
                mono += "^" + std::to_string(e[v]);
            }
        }
        const bool negative = c < 0;
        const rational mag = negative ? rational(-c) : c;
        std::string term;
        if (mono.empty()) {
            term = mag.get_str();
        } else if (mag == 1) {
            term = mono;
        } else {
            term = mag.get_str() + "*" + mono;
        }
        if (out.empty()) {
            out = negative ? "-" + term : term;
        } else {
            out += negative ? " - " + term : " + " + term;
        }
    }
    return out;
}

} // namespace mtamari
