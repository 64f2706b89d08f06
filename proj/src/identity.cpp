#include "wilsonid/identity.hpp"

#include <stdexcept>
#include <string>

#include "wilsonid/combinatorics.hpp"

namespace wilsonid {
namespace {

void require_n(std::int64_t n) {
    if (n < 0) throw std::domain_error("n must be non-negative, got " + std::to_string(n));
}

void require_j(std::int64_t n, std::int64_t j) {
    if (j < 1 || j > n) {
        throw std::domain_error("j must satisfy 1 <= j <= n (n=" + std::to_string(n) +
                                ", j=" + std::to_string(j) + ")");
    }
}

Rational alternating_sum(std::int64_t n, std::uint64_t exponent, const Rational& x) {
    const auto row = binomial_row(n);
    Rational acc;
    for (std::int64_t i = 0; i <= n; ++i) {
        const Rational term = Rational(row[i]) * (x - Rational(i)).pow(exponent);
        if (i % 2 == 0) acc += term;
        else acc -= term;
    }
    return acc;
}

Polynomial alternating_poly(std::int64_t n, std::size_t exponent) {
    const auto row = binomial_row(n);
    const auto base = Polynomial::monomial(exponent);
    Polynomial acc;
    for (std::int64_t i = 0; i <= n; ++i) {
        const Rational weight = i % 2 == 0 ? Rational(row[i]) : -Rational(row[i]);
        acc = poly_axpy(weight, poly_shift(base, Rational(-i)), acc);
    }
    return acc;
}

}  // namespace

Rational eval_difference_sum(std::int64_t n, const Rational& x) {
    require_n(n);
    return alternating_sum(n, static_cast<std::uint64_t>(n), x);
}

Polynomial symbolic_difference_poly(std::int64_t n) {
    require_n(n);
    return alternating_poly(n, static_cast<std::size_t>(n));
}

Rational eval_lower_power_sum(std::int64_t n, std::int64_t j, const Rational& x) {
    require_j(n, j);
    return alternating_sum(n, static_cast<std::uint64_t>(n - j), x);
}

Polynomial symbolic_lower_power_poly(std::int64_t n, std::int64_t j) {
    require_j(n, j);
    return alternating_poly(n, static_cast<std::size_t>(n - j));
}

Polynomial backward_difference(const Polynomial& p, std::int64_t order) {
    if (order < 0) throw std::domain_error("difference order must be non-negative");
    Polynomial q = p;
    for (std::int64_t k = 0; k < order && !q.is_zero(); ++k) {
        q = poly_axpy(Rational(-1), poly_shift(q, Rational(-1)), q);
    }
    return q;
}

VerificationResult verify_theorem1(std::int64_t n, const Rational& x) {
    return {"theorem1", n, std::nullopt, x, eval_difference_sum(n, x), Rational(factorial(n))};
}

VerificationResult verify_corollary2(std::int64_t n, std::int64_t j, const Rational& x) {
    return {"corollary2", n, j, x, eval_lower_power_sum(n, j, x), Rational()};
}

bool derivative_collapse_check(std::int64_t n, std::int64_t j) {
    require_j(n, j);
    Polynomial derived = symbolic_difference_poly(n);
    for (std::int64_t k = 0; k < j; ++k) derived = poly_derivative(derived);

    const Polynomial scaled = poly_axpy(Rational(falling_factorial(n, j)),
                                        symbolic_lower_power_poly(n, j), Polynomial());
    return derived.is_zero() && derived == scaled;
}

std::vector<std::vector<Integer>> difference_table(std::int64_t degree, std::int64_t points) {
    require_n(degree);
    if (points < 1) throw std::domain_error("difference table needs at least one point");
    std::vector<std::vector<Integer>> columns(1);
    columns[0].reserve(static_cast<std::size_t>(points));
    for (std::int64_t x = 0; x < points; ++x) {
        columns[0].push_back(Integer(x).pow(static_cast<std::uint64_t>(degree)));
    }
    while (columns.back().size() > 1 && static_cast<std::int64_t>(columns.size()) <= degree) {
        const auto& prev = columns.back();
        std::vector<Integer> next;
        next.reserve(prev.size() - 1);
        for (std::size_t k = 1; k < prev.size(); ++k) next.push_back(prev[k] - prev[k - 1]);
        columns.push_back(std::move(next));
    }
    return columns;
}

}  // namespace wilsonid
