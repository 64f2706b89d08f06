#include "wilsonid/modular.hpp"

#include <stdexcept>

#include "wilsonid/combinatorics.hpp"

namespace wilsonid {
namespace {

constexpr std::uint64_t kNativeLimit = std::uint64_t{1} << 32;

void require_modulus(const Integer& m) {
    if (m < Integer(2)) throw std::domain_error("modulus must be >= 2, got " + m.to_string());
}

void require_at_least_two(const Integer& n) {
    if (n < Integer(2)) throw std::domain_error("n must be >= 2, got " + n.to_string());
}

void require_prime(const Integer& p) {
    require_at_least_two(p);
    if (const auto d = smallest_divisor(p)) {
        throw std::domain_error("p = " + p.to_string() + " is not prime (divisible by " +
                                d->to_string() + ")");
    }
}

void require_odd_prime(const Integer& p) {
    if (p == Integer(2)) {
        throw std::domain_error("p must be an odd prime (the reduction needs p - 1 even), got p = 2");
    }
    require_prime(p);
}

// The congruence sweeps index with native integers; primes past int64 would
// need a row of 2^63 binomials anyway.
std::int64_t small_prime(const Integer& p) {
    if (!p.fits_int64()) throw std::domain_error("p = " + p.to_string() + " is too large");
    return p.to_int64();
}

Integer alternating_unit(std::int64_t i, const Integer& p) {
    return i % 2 == 0 ? Integer(1).mod(p) : (p - Integer(1));
}

}  // namespace

CongruenceReport::CongruenceReport(std::string check, Integer modulus,
                                   std::vector<CongruenceEntry> entries)
    : check(std::move(check)), modulus(std::move(modulus)), entries(std::move(entries)), holds(true) {
    require_modulus(this->modulus);
    for (const auto& e : this->entries) {
        for (const Integer* v : {&e.residue, &e.expected}) {
            if (v->sign() < 0 || *v >= this->modulus) {
                throw std::logic_error("residue " + v->to_string() + " outside [0, " +
                                       this->modulus.to_string() + ")");
            }
        }
        holds = holds && e.residue == e.expected;
    }
}

Integer mod_pow(const Integer& base, const Integer& exp, const Integer& m) {
    require_modulus(m);
    if (exp.sign() < 0) throw std::domain_error("negative exponent");
    const mpz_class& e = exp.raw();
    const Integer b = base.mod(m);
    Integer acc = Integer(1);
    if (exp.is_zero()) return acc;
    for (auto bit = static_cast<std::int64_t>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
        acc = (acc * acc).mod(m);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit)) != 0) acc = (acc * b).mod(m);
    }
    return acc;
}

Integer factorial_mod(std::int64_t n, const Integer& m) {
    require_modulus(m);
    if (n < 0) throw std::domain_error("factorial_mod: negative argument");
    if (m.fits_uint64() && m.to_uint64() < kNativeLimit) {
        const std::uint64_t mod = m.to_uint64();
        std::uint64_t acc = 1 % mod;
        for (std::int64_t k = 2; k <= n && acc != 0; ++k) {
            acc = acc * (static_cast<std::uint64_t>(k) % mod) % mod;
        }
        return Integer(static_cast<std::int64_t>(acc));
    }
    Integer acc = Integer(1).mod(m);
    for (std::int64_t k = 2; k <= n && !acc.is_zero(); ++k) acc = (acc * Integer(k)).mod(m);
    return acc;
}

std::optional<Integer> smallest_divisor(const Integer& n) {
    require_at_least_two(n);
    if (n.fits_uint64()) {
        const std::uint64_t v = n.to_uint64();
        for (std::uint64_t d = 2; d <= v / d; ++d) {
            if (v % d == 0) return Integer(static_cast<std::int64_t>(d));
        }
        return std::nullopt;
    }
    for (Integer d(2); d * d <= n; d += Integer(1)) {
        if (n.mod(d).is_zero()) return d;
    }
    return std::nullopt;
}

bool trial_division(const Integer& n) { return !smallest_divisor(n).has_value(); }

PrimalityVerdict wilson_test(const Integer& n) {
    require_at_least_two(n);
    if (!n.fits_int64()) throw std::domain_error("wilson_test: n = " + n.to_string() + " is too large");
    const Integer residue = factorial_mod(n.to_int64() - 1, n);
    const bool is_prime = residue == n - Integer(1);
    return {n, residue, is_prime, is_prime == trial_division(n)};
}

CongruenceReport binomial_row_mod(const Integer& p) {
    require_prime(p);
    const std::int64_t q = small_prime(p);
    const auto row = binomial_row(q - 1);
    std::vector<CongruenceEntry> entries;
    entries.reserve(row.size());
    for (std::int64_t i = 0; i < q; ++i) {
        entries.push_back({Integer(i), row[i].mod(p), alternating_unit(i, p)});
    }
    return {"binom", p, std::move(entries)};
}

CongruenceReport fermat_check(const Integer& p) {
    require_prime(p);
    const std::int64_t q = small_prime(p);
    const Integer exp = p - Integer(1);
    std::vector<CongruenceEntry> entries;
    entries.reserve(static_cast<std::size_t>(q - 1));
    for (std::int64_t i = 1; i < q; ++i) {
        entries.push_back({Integer(i), mod_pow(Integer(i), exp, p), Integer(1)});
    }
    return {"fermat", p, std::move(entries)};
}

CongruenceReport power_sum_mod(const Integer& p) {
    require_odd_prime(p);
    const std::int64_t q = small_prime(p);
    const Integer exp = p - Integer(1);
    Integer sum;
    for (std::int64_t i = 0; i < q; ++i) sum = (sum + mod_pow(Integer(i), exp, p)).mod(p);
    return {"power-sum", p, {{Integer(q - 1), sum, factorial_mod(q - 1, p)}}};
}

ZeroPointReport identity_at_zero_mod(const Integer& p) {
    require_odd_prime(p);
    const std::int64_t n = small_prime(p) - 1;
    const auto row = binomial_row(n);
    Integer lhs;
    for (std::int64_t i = 0; i <= n; ++i) {
        // (-i)^(p-1) taken literally; the even exponent is not exploited here.
        const Integer term = row[i] * (-Integer(i)).pow(static_cast<std::uint64_t>(n));
        if (i % 2 == 0) lhs += term;
        else lhs -= term;
    }
    Integer rhs = factorial(n);
    const bool exact = lhs == rhs;
    CongruenceReport congruence("eq1", p, {{Integer(n), lhs.mod(p), factorial_mod(n, p)}});
    return {std::move(congruence), std::move(lhs), std::move(rhs), exact};
}

}  // namespace wilsonid
