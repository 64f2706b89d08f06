#include "wilsonid/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wilsonid {
namespace {

void require_non_negative(std::int64_t n, const char* what) {
    if (n < 0) {
        throw std::domain_error(std::string(what) + ": negative argument " + std::to_string(n));
    }
}

}  // namespace

Integer factorial(std::int64_t n) {
    require_non_negative(n, "factorial");
    Integer r(1);
    for (std::int64_t k = 2; k <= n; ++k) r *= Integer(k);
    return r;
}

Integer binomial(std::int64_t n, std::int64_t i) {
    require_non_negative(n, "binomial");
    if (i < 0 || i > n) return Integer(0);
    const std::int64_t k = std::min(i, n - i);
    Integer r(1);
    // After step t, r == C(n - k + t, t); every division is exact.
    for (std::int64_t t = 1; t <= k; ++t) {
        r *= Integer(n - k + t);
        r = r.div_exact(Integer(t));
    }
    return r;
}

std::vector<Integer> binomial_row(std::int64_t n) {
    require_non_negative(n, "binomial_row");
    std::vector<Integer> row;
    row.reserve(static_cast<std::size_t>(n) + 1);
    row.emplace_back(1);
    // C(n, i+1) = C(n, i) (n - i) / (i + 1)
    for (std::int64_t i = 0; i < n; ++i) {
        row.push_back((row.back() * Integer(n - i)).div_exact(Integer(i + 1)));
    }
    return row;
}

Integer falling_factorial(std::int64_t n, std::int64_t k) {
    require_non_negative(k, "falling_factorial");
    Integer r(1);
    for (std::int64_t t = 0; t < k; ++t) r *= Integer(n - t);
    return r;
}

}  // namespace wilsonid
