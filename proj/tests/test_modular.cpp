#include <gtest/gtest.h>

#include <stdexcept>

#include "wilsonid/combinatorics.hpp"
#include "wilsonid/identity.hpp"
#include "wilsonid/modular.hpp"

using namespace wilsonid;

namespace {

std::vector<std::int64_t> residues(const CongruenceReport& r) {
    std::vector<std::int64_t> out;
    for (const auto& e : r.entries) out.push_back(e.residue.to_int64());
    return out;
}

std::vector<std::int64_t> expected(const CongruenceReport& r) {
    std::vector<std::int64_t> out;
    for (const auto& e : r.entries) out.push_back(e.expected.to_int64());
    return out;
}

}  // namespace

TEST(ModPowTest, Examples) {
    EXPECT_EQ(mod_pow(3, 4, 5), Integer(1));
    EXPECT_EQ(mod_pow(12345, 0, 2), Integer(1));
    EXPECT_EQ(mod_pow(0, 7, 13), Integer(0));
    EXPECT_EQ(mod_pow(-2, 3, 7), Integer(6));  // -8 mod 7
    EXPECT_THROW(mod_pow(3, 4, 1), std::domain_error);
    EXPECT_THROW(mod_pow(3, -1, 5), std::domain_error);
}

TEST(ModPowTest, ExhaustiveAgainstRepeatedMultiplication) {
    for (int m = 2; m <= 97; ++m) {
        for (int b = 0; b <= 64; ++b) {
            std::int64_t naive = 1 % m;
            for (int e = 0; e <= 64; ++e) {
                ASSERT_EQ(mod_pow(b, e, m), Integer(naive)) << b << "^" << e << " mod " << m;
                naive = naive * b % m;
            }
        }
    }
}

TEST(ModPowTest, LargeOperands) {
    const Integer m = factorial(30) + Integer(1);
    const Integer b = factorial(25);
    EXPECT_EQ(mod_pow(b, 3, m), (b * b * b).mod(m));
}

TEST(FactorialModTest, Examples) {
    EXPECT_EQ(factorial_mod(4, 5), Integer(4));
    EXPECT_EQ(factorial_mod(0, 9), Integer(1));
    EXPECT_EQ(factorial_mod(6, 7), Integer(6));
    EXPECT_THROW(factorial_mod(3, 1), std::domain_error);
}

TEST(FactorialModTest, MatchesExactFactorial) {
    const Integer big_modulus = Integer(2).pow(70) + Integer(1);  // past the native fast path
    for (int n = 0; n <= 60; ++n) {
        for (int m : {2, 3, 10, 97, 1009}) ASSERT_EQ(factorial_mod(n, m), factorial(n).mod(m));
        ASSERT_EQ(factorial_mod(n, big_modulus), factorial(n).mod(big_modulus));
    }
}

TEST(TrialDivisionTest, Examples) {
    EXPECT_TRUE(trial_division(13));
    EXPECT_FALSE(trial_division(9));
    EXPECT_TRUE(trial_division(2));
    EXPECT_THROW(trial_division(1), std::domain_error);
    EXPECT_EQ(smallest_divisor(91), Integer(7));
    EXPECT_FALSE(smallest_divisor(97).has_value());
}

TEST(WilsonTest, Examples) {
    const auto five = wilson_test(5);
    EXPECT_EQ(five.wilson_residue, Integer(4));
    EXPECT_TRUE(five.is_prime);
    EXPECT_TRUE(five.oracle_agrees);

    const auto six = wilson_test(6);
    EXPECT_EQ(six.wilson_residue, Integer(0));
    EXPECT_FALSE(six.is_prime);
    EXPECT_TRUE(six.oracle_agrees);

    const auto two = wilson_test(2);
    EXPECT_EQ(two.wilson_residue, Integer(1));
    EXPECT_TRUE(two.is_prime);

    // 4 is the one composite whose residue is not 0: 3! = 6 = 2 mod 4.
    EXPECT_EQ(wilson_test(4).wilson_residue, Integer(2));
    EXPECT_THROW(wilson_test(1), std::domain_error);
}

TEST(WilsonTest, AgreesWithOracleUpTo2000) {
    for (int n = 2; n <= 2000; ++n) {
        const auto v = wilson_test(n);
        ASSERT_TRUE(v.oracle_agrees) << n;
        ASSERT_EQ(v.is_prime, v.wilson_residue == Integer(n - 1));
    }
}

TEST(BinomialRowModTest, Examples) {
    const auto r5 = binomial_row_mod(5);
    EXPECT_EQ(residues(r5), (std::vector<std::int64_t>{1, 4, 1, 4, 1}));
    EXPECT_EQ(expected(r5), (std::vector<std::int64_t>{1, 4, 1, 4, 1}));
    EXPECT_TRUE(r5.holds);

    const auto r2 = binomial_row_mod(2);
    EXPECT_EQ(residues(r2), (std::vector<std::int64_t>{1, 1}));
    EXPECT_EQ(expected(r2), (std::vector<std::int64_t>{1, 1}));
    EXPECT_TRUE(r2.holds);

    const auto r3 = binomial_row_mod(3);
    EXPECT_EQ(residues(r3), (std::vector<std::int64_t>{1, 2, 1}));
    EXPECT_TRUE(r3.holds);
}

TEST(BinomialRowModTest, CompositeRejectedWithWitness) {
    try {
        binomial_row_mod(9);
        FAIL() << "expected domain_error";
    } catch (const std::domain_error& e) {
        EXPECT_NE(std::string(e.what()).find("divisible by 3"), std::string::npos) << e.what();
    }
}

TEST(FermatTest, Examples) {
    for (int p : {2, 5, 7}) {
        const auto r = fermat_check(p);
        EXPECT_TRUE(r.holds) << p;
        EXPECT_EQ(r.entries.size(), static_cast<std::size_t>(p - 1));
        for (const auto& e : r.entries) EXPECT_EQ(e.residue, Integer(1));
    }
    EXPECT_THROW(fermat_check(15), std::domain_error);
}

TEST(PowerSumTest, Examples) {
    const auto r5 = power_sum_mod(5);
    ASSERT_EQ(r5.entries.size(), 1u);
    EXPECT_EQ(r5.entries[0].residue, Integer(354 % 5));
    EXPECT_EQ(r5.entries[0].expected, Integer(4));
    EXPECT_TRUE(r5.holds);

    const auto r3 = power_sum_mod(3);
    EXPECT_EQ(r3.entries[0].residue, Integer(2));
    EXPECT_EQ(r3.entries[0].expected, Integer(2));

    EXPECT_THROW(power_sum_mod(2), std::domain_error);
    EXPECT_THROW(power_sum_mod(21), std::domain_error);
}

TEST(ZeroPointTest, Examples) {
    const auto r3 = identity_at_zero_mod(3);
    EXPECT_EQ(r3.exact_lhs, Integer(2));
    EXPECT_EQ(r3.exact_rhs, Integer(2));
    EXPECT_EQ(r3.congruence.entries[0].residue, Integer(2));
    EXPECT_TRUE(r3.holds());

    const auto r5 = identity_at_zero_mod(5);
    EXPECT_EQ(r5.exact_lhs, Integer(24));
    EXPECT_EQ(r5.congruence.entries[0].residue, Integer(4));
    EXPECT_EQ(r5.congruence.entries[0].expected, Integer(4));

    const auto r7 = identity_at_zero_mod(7);
    EXPECT_EQ(r7.exact_lhs, Integer(720));
    EXPECT_EQ(r7.congruence.entries[0].residue, Integer(6));
    EXPECT_TRUE(r7.holds());

    EXPECT_THROW(identity_at_zero_mod(2), std::domain_error);
    EXPECT_THROW(identity_at_zero_mod(25), std::domain_error);
}

TEST(ZeroPointTest, EvenExponentNegation) {
    // (-i)^e = i^e for every even e; odd e flips the sign.
    for (int i = 0; i <= 40; ++i) {
        for (std::uint64_t e = 0; e <= 40; ++e) {
            const Integer neg = (-Integer(i)).pow(e);
            const Integer pos = Integer(i).pow(e);
            if (e % 2 == 0) ASSERT_EQ(neg, pos);
            else ASSERT_EQ(neg, -pos);
        }
    }
}

TEST(CongruenceReportTest, RejectsUnnormalizedResidues) {
    EXPECT_THROW(CongruenceReport("x", 5, {{0, 5, 0}}), std::logic_error);
    EXPECT_THROW(CongruenceReport("x", 5, {{0, -1, 0}}), std::logic_error);
    EXPECT_THROW(CongruenceReport("x", 1, {}), std::domain_error);
    EXPECT_FALSE(CongruenceReport("x", 5, {{0, 1, 2}}).holds);
}
