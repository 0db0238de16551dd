#include <random>

#include <gtest/gtest.h>

#include <mtamari/formulas.hpp>
#include <mtamari/series.hpp>
#include <mtamari/verify.hpp>

using namespace mtamari;

namespace {

const poly_xyq X = poly_xyq::variable(var_x);
const poly_xyq Y = poly_xyq::variable(var_y);
const poly_xyq Q = poly_xyq::variable(var_q);
const poly_xyq one{1};

poly_xyq random_poly(std::mt19937& rng)
{
    std::uniform_int_distribution<int> deg(0, 12);
    std::uniform_int_distribution<int> small(0, 3);
    std::uniform_int_distribution<int> coeff(-9, 9);
    poly_xyq p;
    const int terms = small(rng) + 1;
    for (int i = 0; i < terms; ++i) {
        p.add_term({deg(rng), small(rng), small(rng)}, coeff(rng));
    }
    return p;
}

} // namespace

TEST(Delta, Examples)
{
    EXPECT_EQ(delta(X * X), X + one);
    EXPECT_TRUE(delta(poly_xyq(5)).is_zero());
    EXPECT_EQ(delta(X * X * Y), (X + one) * Y);
    EXPECT_EQ(delta_q(X), one);
    EXPECT_EQ(delta_q(X * X), Q * X + one);
}

TEST(Delta, IsTheDifferenceQuotient)
{
    std::mt19937 rng(20240531);
    for (int trial = 0; trial < 200; ++trial) {
        const poly_xyq s = random_poly(rng);
        // (x - 1) delta(S) = S(x) - S(1), and the q-version with q x.
        EXPECT_EQ((X - one) * delta(s), s - s.substitute(var_x, 1));
        const poly_xyq qx_s = [&] {
            poly_xyq out;
            for (const auto& [e, c] : s.terms()) {
                out.add_term({e[var_x], e[var_y], e[var_q] + e[var_x]}, c);
            }
            return out;
        }();
        EXPECT_EQ((Q * X - one) * delta_q(s), qx_s - s.substitute(var_x, 1));
        EXPECT_EQ(delta_q(s).substitute(var_q, 1), delta(s).substitute(var_q, 1));
    }
}

TEST(SolveF, Examples)
{
    const auto f = solve_f(1, 1, {.with_y = true});
    EXPECT_EQ(f[0], X);
    EXPECT_EQ(f[1], X * X * Y);
    const auto counts = evaluate(solve_f(1, 4), 1, 1, 1);
    const int expected[] = {1, 1, 3, 13, 68};
    for (int n = 0; n <= 4; ++n) {
        EXPECT_EQ(counts[n], expected[n]);
    }
    const auto fq = solve_f(1, 2, {.with_q = true});
    EXPECT_EQ(fq[2].substitute(var_x, 1), poly_xyq(2) + Q);
    EXPECT_THROW(solve_f(0, 3), invalid_input);
}

TEST(SolveF, ResidualVanishesAndCoefficientsCount)
{
    for (int m = 1; m <= 3; ++m) {
        for (const bool wy : {false, true}) {
            for (const bool wq : {false, true}) {
                const solve_options opts{.with_y = wy, .with_q = wq};
                const auto f = solve_f(m, 6, opts);
                EXPECT_TRUE(functional_residual(f, m, opts).is_zero());
                EXPECT_EQ(f[0], X);
                for (int n = 0; n <= 6; ++n) {
                    EXPECT_LE(f[n].degree(var_x), n + 1);
                    EXPECT_LE(f[n].degree(var_y), n);
                    for (const auto& [e, c] : f[n].terms()) {
                        EXPECT_GT(c, 0);
                        EXPECT_EQ(c.get_den(), 1);
                    }
                }
            }
        }
    }
}

TEST(SolveF, TotalsMatchIntervalCountFormula)
{
    for (int m = 1; m <= 3; ++m) {
        const auto totals = evaluate(solve_f(m, 8), 1, 1, 1);
        for (int n = 1; n <= 8; ++n) {
            EXPECT_EQ(totals[n], rational(count_intervals(m, n))) << m << ' ' << n;
        }
    }
}

TEST(SolveF, MatchesEnumeratedJointStatistics)
{
    for (int m = 1; m <= 2; ++m) {
        const auto solved = solve_f(m, 4, {.with_y = true, .with_q = true});
        const auto brute = brute_force_series(m, 4);
        for (int n = 0; n <= 4; ++n) {
            EXPECT_EQ(solved[n], brute[n]) << m << ' ' << n;
        }
    }
}

TEST(Symmetry, HoldsAndDetectsPerturbation)
{
    EXPECT_TRUE(check_symmetry(solve_f(1, 6, {.with_y = true})));
    EXPECT_TRUE(check_symmetry(solve_f(2, 5, {.with_y = true})));
    auto mutated = solve_f(1, 6, {.with_y = true});
    mutated[4] += X * X;
    EXPECT_FALSE(check_symmetry(mutated));
}

TEST(InvertTToZ, LagrangeCoefficientsAndBackSubstitution)
{
    for (int m = 1; m <= 3; ++m) {
        const int e = m * m + 2 * m;
        const int order = 9;
        const auto z = invert_t_to_z(m, order);
        EXPECT_EQ(z[0], 0);
        for (int n = 1; n <= order; ++n) {
            EXPECT_EQ(z[n], rational(binomial(static_cast<long>(e) * n + n - 2, n - 1)) / n) << m << ' ' << n;
        }
        const auto one = rational_series::constant(1, order);
        EXPECT_EQ(z * (one - z).pow(e), rational_series::variable(order));
    }
    const auto z1 = invert_t_to_z(1, 2);
    EXPECT_EQ(z1[1], 1);
    EXPECT_EQ(z1[2], 3);
}

TEST(Parametrization, ClosedFormAtOne)
{
    EXPECT_TRUE(check_f11_parametrization(1, 8));
    EXPECT_TRUE(check_f11_parametrization(2, 6));
    EXPECT_TRUE(check_f11_parametrization(3, 5));
}

TEST(Parametrization, FullRationalForm)
{
    EXPECT_TRUE(check_full_parametrization(1, 6, 2, 3));
    EXPECT_TRUE(check_full_parametrization(2, 5, 2, 3));
    EXPECT_TRUE(check_full_parametrization(1, 5, rational(1, 2), 3));
    EXPECT_THROW(check_full_parametrization(1, 4, 1, 1), degenerate_evaluation);
}

TEST(Parametrization, SolvedUSatisfiesItsEquation)
{
    const int order = 8;
    for (int m = 1; m <= 3; ++m) {
        const rational x0 = 2;
        const auto u = solve_u(m, x0, order);
        const auto one = rational_series::constant(1, order);
        EXPECT_EQ(u[0], x0 - 1);
        EXPECT_EQ(one + u, (one + u.shifted(1)).pow(m + 1) * x0);
    }
}
