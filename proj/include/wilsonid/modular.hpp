#pragma once

// Congruence chain from the alternating difference identity at x = 0 down to
// Wilson's theorem, plus a trial-division oracle to cross-check primality.
//
// All residues are normalized to [0, m). "(-1)^i mod p" is therefore 1 for
// even i and p - 1 for odd i, which collapses to 1 everywhere when p = 2.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wilsonid/integer.hpp"

namespace wilsonid {

struct CongruenceEntry {
    Integer index;
    Integer residue;
    Integer expected;

    friend bool operator==(const CongruenceEntry&, const CongruenceEntry&) = default;
};

/// Per-index residues against their expected values. The constructor rejects
/// residues outside [0, modulus) and derives `holds`.
struct CongruenceReport {
    CongruenceReport(std::string check, Integer modulus, std::vector<CongruenceEntry> entries);

    std::string check;
    Integer modulus;
    std::vector<CongruenceEntry> entries;
    bool holds;
};

struct PrimalityVerdict {
    Integer n;
    Integer wilson_residue;
    bool is_prime;       // wilson_residue == n - 1
    bool oracle_agrees;  // is_prime == trial_division(n)
};

/// Result of evaluating the identity at x = 0 with n = p - 1. The sum is kept
/// exact so it can be compared with (p-1)! before any reduction.
struct ZeroPointReport {
    CongruenceReport congruence;
    Integer exact_lhs;
    Integer exact_rhs;  // (p-1)!
    bool exact_holds;

    bool holds() const { return exact_holds && congruence.holds; }
};

/// base^exp mod m in [0, m) by left-to-right square-and-multiply.
/// Throws std::domain_error when m < 2 or exp < 0.
Integer mod_pow(const Integer& base, const Integer& exp, const Integer& m);

/// n! mod m, reducing after every multiplication. Throws std::domain_error
/// when m < 2 or n < 0.
Integer factorial_mod(std::int64_t n, const Integer& m);

/// Smallest d with 2 <= d <= sqrt(n) dividing n, or nullopt when n is prime.
/// Throws std::domain_error when n < 2.
std::optional<Integer> smallest_divisor(const Integer& n);

/// Primality by trial division up to sqrt(n). Throws std::domain_error when n < 2.
bool trial_division(const Integer& n);

/// Primality from (n-1)! mod n; O(n) modular multiplications, so only fit for
/// small n. Throws std::domain_error when n < 2.
PrimalityVerdict wilson_test(const Integer& n);

/// Entries (i, C(p-1, i) mod p, (-1)^i mod p) for 0 <= i <= p-1. The binomials
/// are formed exactly and reduced afterwards.
CongruenceReport binomial_row_mod(const Integer& p);

/// Entries (i, i^(p-1) mod p, 1) for 1 <= i <= p-1.
CongruenceReport fermat_check(const Integer& p);

/// Single entry at index p-1: (sum_{i=0..p-1} i^(p-1)) mod p against
/// (p-1)! mod p. Odd primes only.
CongruenceReport power_sum_mod(const Integer& p);

/// sum_{i=0..p-1} (-1)^i C(p-1, i) (-i)^(p-1), exact, then reduced; single
/// entry at index p-1 against (p-1)! mod p. Odd primes only.
ZeroPointReport identity_at_zero_mod(const Integer& p);

}  // namespace wilsonid
