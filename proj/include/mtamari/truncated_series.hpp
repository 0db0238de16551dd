#pragma once

#include <algorithm>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "polynomial.hpp"

namespace mtamari {

namespace detail {

inline bool coeff_is_zero(const rational& c) { return c == 0; }

template <std::size_t N>
bool coeff_is_zero(const polynomial<N>& c)
{
    return c.is_zero();
}

inline rational coeff_unit_inverse(const rational& c)
{
    if (c == 0) {
        throw non_divisible("series with zero constant term is not invertible");
    }
    return rational(1) / c;
}

template <std::size_t N>
polynomial<N> coeff_unit_inverse(const polynomial<N>& c)
{
    if (!c.is_constant() || c.is_zero()) {
        throw non_divisible("series constant term is not a nonzero rational");
    }
    return polynomial<N>(rational(1) / c.constant_term());
}

} // namespace detail

// Power series in one variable, truncated after order() (terms of degree
// greater than order() are unknown, not zero). C is rational or polynomial<N>.
template <class C>
class truncated_series {
public:
    using coefficient_type = C;

    truncated_series() : coeffs_(1) {}
    explicit truncated_series(int order) : coeffs_(static_cast<std::size_t>(check_order(order)) + 1) {}

    static truncated_series constant(const C& c, int order)
    {
        truncated_series s(order);
        s.coeffs_[0] = c;
        return s;
    }

    // The series variable itself.
    static truncated_series variable(int order)
    {
        truncated_series s(order);
        if (order >= 1) {
            s.coeffs_[1] = C(1);
        }
        return s;
    }

    // a + b*var, the common shape 1 + z*u.
    static truncated_series linear(const C& a, const C& b, int order)
    {
        truncated_series s = constant(a, order);
        if (order >= 1) {
            s.coeffs_[1] = b;
        }
        return s;
    }

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    const C& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    C& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

    const std::vector<C>& coefficients() const noexcept { return coeffs_; }

    truncated_series truncated(int order) const
    {
        truncated_series s(order);
        for (int k = 0; k <= std::min(order, this->order()); ++k) {
            s.coeffs_[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)];
        }
        return s;
    }

    bool is_zero() const
    {
        for (const auto& c : coeffs_) {
            if (!detail::coeff_is_zero(c)) {
                return false;
            }
        }
        return true;
    }

    // Multiply by var^k, dropping what moves past order().
    truncated_series shifted(int k) const
    {
        truncated_series s(order());
        for (int i = order(); i >= k; --i) {
            s.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i - k)];
        }
        return s;
    }

    template <class F>
    auto map(F&& f) const
    {
        using R = std::decay_t<decltype(f(coeffs_[0]))>;
        truncated_series<R> s(order());
        for (int k = 0; k <= order(); ++k) {
            s[k] = f(coeffs_[static_cast<std::size_t>(k)]);
        }
        return s;
    }

    truncated_series& operator+=(const truncated_series& o)
    {
        shrink_to(o.order());
        for (int k = 0; k <= order(); ++k) {
            coeffs_[static_cast<std::size_t>(k)] += o.coeffs_[static_cast<std::size_t>(k)];
        }
        return *this;
    }

    truncated_series& operator-=(const truncated_series& o)
    {
        shrink_to(o.order());
        for (int k = 0; k <= order(); ++k) {
            coeffs_[static_cast<std::size_t>(k)] -= o.coeffs_[static_cast<std::size_t>(k)];
        }
        return *this;
    }

    truncated_series& operator*=(const C& s)
    {
        for (auto& c : coeffs_) {
            c = c * s;
        }
        return *this;
    }

    friend truncated_series operator+(truncated_series a, const truncated_series& b) { return a += b; }
    friend truncated_series operator-(truncated_series a, const truncated_series& b) { return a -= b; }
    friend truncated_series operator-(const truncated_series& a) { return truncated_series(a.order()) - a; }
    friend truncated_series operator*(truncated_series a, const C& s) { return a *= s; }
    friend truncated_series operator*(const C& s, truncated_series a) { return a *= s; }

    friend truncated_series operator*(const truncated_series& a, const truncated_series& b)
    {
        const int order = std::min(a.order(), b.order());
        truncated_series out(order);
        for (int i = 0; i <= order; ++i) {
            const C& ai = a.coeffs_[static_cast<std::size_t>(i)];
            if (detail::coeff_is_zero(ai)) {
                continue;
            }
            for (int j = 0; i + j <= order; ++j) {
                const C& bj = b.coeffs_[static_cast<std::size_t>(j)];
                if (detail::coeff_is_zero(bj)) {
                    continue;
                }
                out.coeffs_[static_cast<std::size_t>(i + j)] += ai * bj;
            }
        }
        return out;
    }

    truncated_series& operator*=(const truncated_series& o) { return *this = *this * o; }

    friend bool operator==(const truncated_series& a, const truncated_series& b)
    {
        return a.coeffs_ == b.coeffs_;
    }

    // Multiplicative inverse; the constant term must be a nonzero scalar.
    truncated_series inverse() const
    {
        const C inv0 = detail::coeff_unit_inverse(coeffs_[0]);
        truncated_series out(order());
        out.coeffs_[0] = inv0;
        for (int n = 1; n <= order(); ++n) {
            C acc{};
            for (int k = 1; k <= n; ++k) {
                const C& ak = coeffs_[static_cast<std::size_t>(k)];
                if (!detail::coeff_is_zero(ak)) {
                    acc += ak * out.coeffs_[static_cast<std::size_t>(n - k)];
                }
            }
            out.coeffs_[static_cast<std::size_t>(n)] = -(acc * inv0);
        }
        return out;
    }

    // Integer power; negative exponents go through inverse().
    truncated_series pow(int e) const
    {
        if (e < 0) {
            return inverse().pow(-e);
        }
        truncated_series result = constant(C(1), order());
        truncated_series base = *this;
        while (e > 0) {
            if (e & 1) {
                result *= base;
            }
            e >>= 1;
            if (e > 0) {
                base *= base;
            }
        }
        return result;
    }

    // this(inner(t)); inner must have zero constant term.
    truncated_series compose(const truncated_series& inner) const
    {
        if (!detail::coeff_is_zero(inner[0])) {
            throw invalid_input("composition needs an inner series without constant term");
        }
        const int order = std::min(this->order(), inner.order());
        truncated_series result = constant(coeffs_[static_cast<std::size_t>(order)], order);
        const truncated_series in = inner.truncated(order);
        for (int k = order - 1; k >= 0; --k) {
            result = result * in;
            result.coeffs_[0] += coeffs_[static_cast<std::size_t>(k)];
        }
        return result;
    }

private:
    static int check_order(int order)
    {
        if (order < 0) {
            throw invalid_input("truncation order must be nonnegative");
        }
        return order;
    }

    void shrink_to(int order)
    {
        if (order < this->order()) {
            coeffs_.resize(static_cast<std::size_t>(order) + 1);
        }
    }

    std::vector<C> coeffs_;
};

} // namespace mtamari
