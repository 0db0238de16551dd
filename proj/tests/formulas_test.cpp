#include <gtest/gtest.h>

#include <mtamari/formulas.hpp>
#include <mtamari/lattice.hpp>

using namespace mtamari;

namespace {

// a (a-1) ... (a-b+1) / b! by direct rational products.
rational falling_binomial(long a, long b)
{
    if (b < 0) {
        return 0;
    }
    rational r = 1;
    for (long j = 0; j < b; ++j) {
        r *= rational(a - j) / rational(j + 1);
    }
    return r;
}

} // namespace

TEST(Binomial, Examples)
{
    EXPECT_EQ(binomial(5, 0), 1);
    EXPECT_EQ(binomial(4, 2), 6);
    EXPECT_EQ(binomial(7, -1), 0);
    EXPECT_EQ(binomial(3, 5), 0);
    EXPECT_EQ(binomial(-1, 3), -1);
    EXPECT_EQ(binomial(-3, 2), 6);
}

TEST(Binomial, MatchesProductFormulaAndPascalRule)
{
    for (long a = -12; a <= 20; ++a) {
        for (long b = -3; b <= 15; ++b) {
            EXPECT_EQ(rational(binomial(a, b)), falling_binomial(a, b)) << a << ' ' << b;
            if (b >= 1) {
                EXPECT_EQ(binomial(a, b), binomial(a - 1, b - 1) + binomial(a - 1, b)) << a << ' ' << b;
            }
        }
    }
}

TEST(CountPaths, Examples)
{
    EXPECT_EQ(count_paths(1, 4), 14);
    EXPECT_EQ(count_paths(2, 3), 12);
    EXPECT_EQ(count_paths(5, 0), 1);
    EXPECT_THROW(count_paths(0, 3), out_of_range);
}

TEST(CountIntervals, Examples)
{
    EXPECT_EQ(count_intervals(1, 1), 1);
    EXPECT_EQ(count_intervals(1, 4), 68);
    EXPECT_EQ(count_intervals(2, 3), 58);
    const int m1[] = {1, 3, 13, 68, 399, 2530};
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(count_intervals(1, n), m1[n - 1]);
    }
    EXPECT_THROW(count_intervals(1, 0), out_of_range);
}

TEST(CountIntervals, LargeSizesStayIntegral)
{
    const integer big = count_intervals(1, 100);
    EXPECT_GT(big, 0);
    EXPECT_GT(big.get_str().size(), 80U);
    for (long m = 1; m <= 5; ++m) {
        EXPECT_GT(count_intervals(m, 300), 0);
    }
}

TEST(ContactPolynomial, KnownClosedForms)
{
    for (long n = 1; n <= 30; ++n) {
        for (long i = 2; i <= n + 1; ++i) {
            EXPECT_EQ(contact_polynomial(1, n, i), 2);
            EXPECT_EQ(contact_polynomial(2, n, i), 6 * (33 * i * n - 9 * i * i + 15 * i - 2 * n - 2)) << n << ' ' << i;
        }
    }
    EXPECT_THROW(contact_polynomial(2, 3, 1), out_of_range);
}

TEST(ContactPolynomial, VanishesAtOneAndSummandsDivisibleByI)
{
    for (long m = 1; m <= 4; ++m) {
        for (long n = 1; n <= 8; ++n) {
            EXPECT_EQ(contact_polynomial_scaled(m, n, 1), 0) << m << ' ' << n;
            for (long i = 1; i <= n + 1; ++i) {
                const auto parts = contact_polynomial_parts(m, n, i);
                EXPECT_EQ(rational(parts.leading / i).get_den(), 1);
                EXPECT_EQ(rational(parts.middle / i).get_den(), 1);
                EXPECT_EQ(rational(parts.trailing / i).get_den(), 1);
                if (m <= 2) {
                    EXPECT_EQ(parts.middle, 0);
                }
            }
        }
    }
}

TEST(CountByContacts, Examples)
{
    EXPECT_EQ(count_by_contacts(1, 2, 2), 1);
    EXPECT_EQ(count_by_contacts(1, 2, 3), 2);
    EXPECT_EQ(count_by_contacts(1, 1, 2), 1);
    EXPECT_THROW(count_by_contacts(1, 3, 1), out_of_range);
    EXPECT_THROW(count_by_contacts(1, 3, 5), out_of_range);
}

TEST(CountByContacts, RowsSumToIntervalCounts)
{
    for (long m = 1; m <= 3; ++m) {
        for (long n = 1; n <= 8; ++n) {
            integer sum = 0;
            for (long i = 2; i <= n + 1; ++i) {
                sum += count_by_contacts(m, n, i);
            }
            EXPECT_EQ(sum, count_intervals(m, n)) << m << ' ' << n;
        }
    }
    for (long m = 4; m <= 5; ++m) {
        integer sum = 0;
        for (long i = 2; i <= 41; ++i) {
            sum += count_by_contacts(m, 40, i);
        }
        EXPECT_EQ(sum, count_intervals(m, 40));
    }
}

TEST(CountByContacts, SpecializationForMEqualsOne)
{
    for (long n = 1; n <= 40; ++n) {
        for (long i = 2; i <= n + 1; ++i) {
            EXPECT_EQ(count_by_contacts(1, n, i), count_by_contacts_m1(n, i));
        }
    }
}

TEST(CountByContacts, MatchesEnumeration)
{
    for (int m = 1; m <= 2; ++m) {
        for (int n = 1; n <= 4; ++n) {
            const auto stats = interval_table(build_hasse(m, n));
            for (int i = 2; i <= n + 1; ++i) {
                const auto it = stats.by_contacts.find(i);
                const unsigned long brute = it == stats.by_contacts.end() ? 0UL : it->second;
                EXPECT_EQ(count_by_contacts(m, n, i), integer(brute)) << m << ' ' << n << ' ' << i;
            }
        }
    }
}
