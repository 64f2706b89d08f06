#include <gtest/gtest.h>

#include <stdexcept>

#include "test_helpers.hpp"
#include "wilsonid/combinatorics.hpp"
#include "wilsonid/identity.hpp"

using namespace wilsonid;
using wilsonid::testing::Q;

namespace {

constexpr std::uint64_t kSeed = 777;

// Brute-force sum with both factors formed from scratch: C(n, i) as a
// factorial quotient, (x - i)^e by repeated multiplication.
Rational brute_sum(int n, int e, const Rational& x) {
    Rational acc;
    for (int i = 0; i <= n; ++i) {
        const Integer c = factorial(n).div_exact(factorial(i) * factorial(n - i));
        Rational power(1);
        for (int k = 0; k < e; ++k) power = power * (x - Q(i));
        Rational term = Rational(c) * power;
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

TEST(DifferenceSumTest, Examples) {
    EXPECT_EQ(eval_difference_sum(0, Q(17, 3)), Q(1));
    EXPECT_EQ(eval_difference_sum(3, Q(7)), Q(6));
    EXPECT_EQ(Q(343 - 3 * 216 + 3 * 125 - 64), Q(6));
    EXPECT_EQ(eval_difference_sum(4, Q(1, 2)), Q(24));
    EXPECT_EQ(brute_sum(4, 4, Q(1, 2)), Q(24));
    EXPECT_THROW(eval_difference_sum(-1, Q(0)), std::domain_error);
}

TEST(DifferenceSumTest, AgreesWithBruteForce) {
    const auto xs = random_rationals(kSeed, 8);
    for (int n = 0; n <= 15; ++n) {
        for (const auto& x : xs) {
            ASSERT_EQ(eval_difference_sum(n, x), brute_sum(n, n, x)) << "n=" << n << " x=" << x;
        }
    }
}

TEST(DifferenceSumTest, IndependentOfX) {
    for (int n = 0; n <= 60; n += 3) {
        const auto xs = random_rationals(kSeed + n, 2);
        EXPECT_EQ(eval_difference_sum(n, xs[0]), eval_difference_sum(n, xs[1])) << "seed " << kSeed + n;
    }
}

TEST(SymbolicDifferenceTest, CollapsesToFactorial) {
    EXPECT_EQ(symbolic_difference_poly(0), Polynomial::constant(Q(1)));
    EXPECT_EQ(symbolic_difference_poly(1), Polynomial::constant(Q(1)));
    EXPECT_EQ(symbolic_difference_poly(3), Polynomial::constant(Q(6)));
    for (int n = 0; n <= 30; ++n) {
        ASSERT_EQ(symbolic_difference_poly(n), Polynomial::constant(Rational(factorial(n)))) << n;
    }
}

TEST(LowerPowerTest, Examples) {
    EXPECT_EQ(eval_lower_power_sum(3, 1, Q(2)), Q(0));
    EXPECT_EQ(Q(4 - 3 * 1 + 3 * 0 - 1), Q(0));
    EXPECT_EQ(eval_lower_power_sum(5, 5, Q(123, 7)), Q(0));
    EXPECT_EQ(eval_lower_power_sum(5, 2, Q(-3, 2)), Q(0));
    EXPECT_EQ(brute_sum(5, 3, Q(-3, 2)), Q(0));
}

TEST(LowerPowerTest, RangeErrors) {
    EXPECT_THROW(eval_lower_power_sum(3, 4, Q(2)), std::domain_error);
    EXPECT_THROW(eval_lower_power_sum(3, 0, Q(2)), std::domain_error);
    EXPECT_THROW(eval_lower_power_sum(0, 0, Q(2)), std::domain_error);
    EXPECT_THROW(symbolic_lower_power_poly(0, 1), std::domain_error);
    EXPECT_THROW(verify_corollary2(3, 4, Q(2)), std::domain_error);
    EXPECT_THROW(derivative_collapse_check(2, 3), std::domain_error);
}

TEST(LowerPowerTest, SymbolicIsZero) {
    EXPECT_TRUE(symbolic_lower_power_poly(3, 1).is_zero());
    EXPECT_TRUE(symbolic_lower_power_poly(7, 7).is_zero());
    EXPECT_TRUE(symbolic_lower_power_poly(4, 2).is_zero());
}

TEST(LowerPowerTest, NonZeroOutsideRange) {
    // Exponent n + 1 is outside the family; the sum is no longer zero or n!.
    EXPECT_NE(brute_sum(3, 4, Q(0)), Q(0));
}

TEST(BackwardDifferenceTest, Examples) {
    EXPECT_EQ(backward_difference(Polynomial::monomial(1), 1), Polynomial::constant(Q(1)));
    EXPECT_TRUE(backward_difference(Polynomial::constant(Q(5, 3)), 1).is_zero());
    EXPECT_EQ(backward_difference(Polynomial::monomial(3), 3), Polynomial::constant(Q(6)));
    EXPECT_EQ(backward_difference(Polynomial::monomial(3), 3), symbolic_difference_poly(3));
    const Polynomial p{Q(1), Q(2), Q(3)};
    EXPECT_EQ(backward_difference(p, 0), p);
    EXPECT_THROW(backward_difference(p, -1), std::domain_error);
}

TEST(BackwardDifferenceTest, MatchesAlternatingSum) {
    for (int n = 0; n <= 20; ++n) {
        ASSERT_EQ(backward_difference(Polynomial::monomial(n), n), symbolic_difference_poly(n)) << n;
    }
}

TEST(VerifyTest, Theorem1) {
    const auto r = verify_theorem1(3, Q(7));
    EXPECT_EQ(r.lhs, Q(6));
    EXPECT_EQ(r.rhs, Q(6));
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.check, "theorem1");

    const auto z = verify_theorem1(0, Q(0));
    EXPECT_EQ(z.lhs, Q(1));
    EXPECT_TRUE(z.holds);

    const auto s = verify_theorem1(6, Q(-5, 7));
    EXPECT_EQ(brute_sum(6, 6, Q(-5, 7)), Q(720));
    EXPECT_EQ(s.rhs, Q(720));
    EXPECT_TRUE(s.holds);
}

TEST(VerifyTest, HoldsTracksEquality) {
    const VerificationResult bad("theorem1", 2, std::nullopt, Q(0), Q(3), Q(2));
    EXPECT_FALSE(bad.holds);
}

TEST(VerifyTest, Corollary2) {
    const auto r = verify_corollary2(3, 1, Q(2));
    EXPECT_EQ(r.lhs, Q(0));
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.j, 1);
    EXPECT_TRUE(verify_corollary2(5, 5, Q(9, 4)).holds);
}

TEST(DerivativeCollapseTest, Examples) {
    EXPECT_TRUE(derivative_collapse_check(3, 1));
    EXPECT_TRUE(derivative_collapse_check(4, 4));
    EXPECT_TRUE(derivative_collapse_check(1, 1));
}

TEST(DifferenceTableTest, DegreeTwo) {
    const auto t = difference_table(2, 5);
    ASSERT_EQ(t.size(), 3u);
    EXPECT_EQ(t[0], (std::vector<Integer>{0, 1, 4, 9, 16}));
    EXPECT_EQ(t[1], (std::vector<Integer>{1, 3, 5, 7}));
    EXPECT_EQ(t[2], (std::vector<Integer>{2, 2, 2}));
}

TEST(DifferenceTableTest, DegreeZero) {
    const auto t = difference_table(0, 3);
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(t[0], (std::vector<Integer>{1, 1, 1}));
}
