#pragma once

#include <cstdint>
#include <vector>

#include "wilsonid/integer.hpp"

namespace wilsonid {

/// n! for n >= 0. Throws std::domain_error for negative n.
Integer factorial(std::int64_t n);

/// C(n, i) by the multiplicative formula with running exact division.
/// Zero whenever i < 0 or i > n. Throws std::domain_error for negative n.
Integer binomial(std::int64_t n, std::int64_t i);

/// The whole row C(n, 0..n), built with the same running recurrence.
std::vector<Integer> binomial_row(std::int64_t n);

/// n (n-1) ... (n-k+1); 1 when k == 0.
Integer falling_factorial(std::int64_t n, std::int64_t k);

}  // namespace wilsonid
