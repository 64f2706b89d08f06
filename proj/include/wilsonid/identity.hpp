#pragma once

// The alternating difference identity
//
//     sum_{i=0..n} (-1)^i C(n,i) (x - i)^n = n!
//
// and its lower-power companions (exponent n - j, 1 <= j <= n, sum is 0),
// checked two independent ways: pointwise in exact rational arithmetic, and
// symbolically by expanding the sum into a single polynomial in X.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wilsonid/polynomial.hpp"
#include "wilsonid/rational.hpp"

namespace wilsonid {

/// One identity instance. `holds` is fixed at construction as lhs == rhs.
struct VerificationResult {
    VerificationResult(std::string check, std::int64_t n, std::optional<std::int64_t> j,
                       std::optional<Rational> x, Rational lhs, Rational rhs)
        : check(std::move(check)), n(n), j(j), x(std::move(x)), lhs(std::move(lhs)),
          rhs(std::move(rhs)), holds(this->lhs == this->rhs) {}

    std::string check;
    std::int64_t n;
    std::optional<std::int64_t> j;
    std::optional<Rational> x;
    Rational lhs;
    Rational rhs;
    bool holds;
};

/// Literal sum at x, accumulated i = 0..n. Never shortcuts to n!.
Rational eval_difference_sum(std::int64_t n, const Rational& x);

/// The same sum expanded in X via poly_shift of X^n. Should collapse to n!.
Polynomial symbolic_difference_poly(std::int64_t n);

/// sum (-1)^i C(n,i) (x - i)^(n-j). Requires 1 <= j <= n.
Rational eval_lower_power_sum(std::int64_t n, std::int64_t j, const Rational& x);

/// Symbolic form of eval_lower_power_sum. Should be the zero polynomial.
Polynomial symbolic_lower_power_poly(std::int64_t n, std::int64_t j);

/// order-fold application of p(X) -> p(X) - p(X - 1).
Polynomial backward_difference(const Polynomial& p, std::int64_t order);

VerificationResult verify_theorem1(std::int64_t n, const Rational& x);

VerificationResult verify_corollary2(std::int64_t n, std::int64_t j, const Rational& x);

/// Differentiates the expanded f_n j times and compares against
/// n(n-1)...(n-j+1) times the expanded lower-power sum. True iff both sides
/// agree and are the zero polynomial.
bool derivative_collapse_check(std::int64_t n, std::int64_t j);

/// Classic difference table of x^degree sampled at x = 0..points-1. Column 0
/// holds the samples; column c holds c-th backward differences for x >= c, so
/// it is points - c long. Requires degree >= 0 and points >= 1.
std::vector<std::vector<Integer>> difference_table(std::int64_t degree, std::int64_t points);

}  // namespace wilsonid
