#include <gtest/gtest.h>

#include <mtamari/identities.hpp>

using namespace mtamari;

namespace {

const poly_uv U = poly_uv::variable(var_u);
const poly_uv one{1};

} // namespace

TEST(Lambda, ElementaryValues)
{
    const int n = 10;
    const z_series z = z_series::variable(n);
    const z_series unit = z_series::constant(one, n);
    const z_series w = w_power(1, n);
    EXPECT_TRUE(lambda(unit).is_zero());
    EXPECT_EQ(lambda(w), (z - unit) * w + w_power(2, n));
    EXPECT_EQ(lambda(w), z * (one + U) * w);
    EXPECT_EQ(lambda(w_power(-1, n)), (unit - z) - w);
}

TEST(Lambda, IgnoresTheSpectatorVariable)
{
    const int n = 6;
    const z_series h = w_power(-2, n) * w_power(3, n, var_v);
    EXPECT_EQ(lambda(h), lambda(w_power(-2, n)) * w_power(3, n, var_v));
}

TEST(Lambda, ElementaryIdentities)
{
    EXPECT_TRUE(verify_lambda_elem(1, 10));
    for (int p = 1; p <= 6; ++p) {
        EXPECT_TRUE(verify_lambda_elem(p, 15)) << p;
    }
    EXPECT_THROW(verify_lambda_elem(0, 5), out_of_range);
}

TEST(Lambda, IteratedOnInversePowers)
{
    const int n = 10;
    const z_series z = z_series::variable(n);
    EXPECT_EQ(lambda(w_power(-1, n)), z * (-(one + U)));
    for (int m = 1; m <= 6; ++m) {
        EXPECT_TRUE(verify_lambda_inverse_power(m, 20)) << m;
    }
}

TEST(Lambda, KFoldIdentity)
{
    for (int m = 1; m <= 5; ++m) {
        const z_series inverse_power_rhs = z_linear(1, -1, 20).pow(m) - w_power(m, 20);
        EXPECT_EQ(identity_k_rhs(m, m, 20), inverse_power_rhs) << m;
        for (int k = 1; k <= m; ++k) {
            EXPECT_TRUE(verify_identity_k(m, k, 20)) << m << ' ' << k;
        }
    }
    EXPECT_THROW(verify_identity_k(2, 3, 5), out_of_range);
}

TEST(HSeries, SymmetricWithPolynomialCoefficients)
{
    for (int m = 1; m <= 3; ++m) {
        const z_series h = h_series(m, 12);
        EXPECT_TRUE(is_symmetric_uv(h));
        // At z = 0: H = (1+u)(1+v) ((1+u) - (1+v)) / (u - v) = (1+u)(1+v).
        EXPECT_EQ(h[0], (one + U) * (one + poly_uv::variable(var_v)));
    }
}

TEST(FinalIdentity, FullAndSimpleForms)
{
    EXPECT_TRUE(verify_final_id(1, 12));
    EXPECT_TRUE(verify_final_id(3, 10));
    for (int m = 1; m <= 3; ++m) {
        EXPECT_TRUE(verify_final_id(m, 20)) << m;
    }
}

TEST(SymmetricForm, HoldsForHAndItsImages)
{
    EXPECT_TRUE(verify_sym_form(h_series(1, 12), 12));
    for (int m = 1; m <= 2; ++m) {
        EXPECT_TRUE(verify_sym_form_iterates(m, 20)) << m;
    }
}

TEST(SymmetricForm, RejectsAsymmetricPerturbation)
{
    z_series h = h_series(1, 10);
    h[2] += U * U;
    EXPECT_FALSE(verify_sym_form(h, 10));
    EXPECT_FALSE(is_symmetric_uv(h));
}

TEST(KernelRoot, CatalanAtZEqualsOne)
{
    const tz_series s = kernel_root(12);
    EXPECT_TRUE(s[0].is_zero());
    for (int n = 1; n <= 12; ++n) {
        const integer catalan = binomial(2 * (n - 1), n - 1) / n;
        EXPECT_EQ(s[n].evaluate({rational(1)}), rational(catalan)) << n;
    }
    // S = t + S^2 + t (z - 1) S.
    const tz_series t = tz_series::variable(12);
    const poly_z z_minus_1 = poly_z::variable(0) - poly_z(1);
    EXPECT_EQ(s, t + s * s + t * s * z_minus_1);
}

TEST(KernelRoot, LagrangeCoefficients)
{
    const tz_series s = kernel_root(8);
    const tz_series s1 = s - tz_series::constant(poly_z(1), 8);
    for (int k = 0; k <= 6; ++k) {
        const tz_series lhs = s.pow(k) * s1;
        if (k >= 1) {
            EXPECT_EQ(lhs[k], poly_z(-1));
        }
        EXPECT_EQ(lhs[k + 1], poly_z(1) - poly_z::variable(0) * rational(k));
    }
    EXPECT_EQ((s * s1)[4], kernel_power_coefficient(4, 1));
    EXPECT_TRUE(verify_kernel_lagrange(10));
}

TEST(Hypergeometric, TerminalSum)
{
    EXPECT_EQ(hypergeometric_sum(2, 1), 1);
    EXPECT_EQ(hypergeometric_sum(5, 3), 0);
    EXPECT_EQ(hypergeometric_sum(6, 1), 5);
    for (int d = 2; d <= 8; ++d) {
        for (int p = 1; p <= d; ++p) {
            EXPECT_TRUE(verify_hypergeometric(d + 3, 3, p)) << d << ' ' << p;
        }
    }
    EXPECT_THROW(verify_hypergeometric(3, 2, 1), out_of_range);
}

TEST(Telescoping, BinomialSums)
{
    for (int a = -6; a <= 6; ++a) {
        for (int b = 0; b <= 6; ++b) {
            for (int r2 = -12; r2 <= 12; ++r2) {
                for (int r1 = -12; r1 <= r2; ++r1) {
                    EXPECT_TRUE(verify_telescoping(a, b, r1, r2));
                }
            }
        }
    }
}
