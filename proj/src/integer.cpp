#include "wilsonid/integer.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace wilsonid {

Integer::Integer(std::int64_t v) {
    mpz_set_si(v_.get_mpz_t(), static_cast<long>(v));
}

Integer Integer::parse(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty()) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
        }
    }
    Integer r;
    mpz_set_str(r.v_.get_mpz_t(), std::string(text).c_str(), 10);
    return r;
}

bool Integer::fits_int64() const {
    static_assert(sizeof(long) == sizeof(std::int64_t));
    return mpz_fits_slong_p(v_.get_mpz_t()) != 0;
}

bool Integer::fits_uint64() const {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return mpz_fits_ulong_p(v_.get_mpz_t()) != 0;
}

std::int64_t Integer::to_int64() const { return mpz_get_si(v_.get_mpz_t()); }

std::uint64_t Integer::to_uint64() const { return mpz_get_ui(v_.get_mpz_t()); }

Integer Integer::pow(std::uint64_t exp) const {
    Integer r;
    mpz_pow_ui(r.v_.get_mpz_t(), v_.get_mpz_t(), exp);
    return r;
}

Integer Integer::div_exact(const Integer& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero");
    Integer r;
    mpz_divexact(r.v_.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
    return r;
}

Integer Integer::mod(const Integer& m) const {
    if (m.sign() <= 0) throw std::domain_error("modulus must be positive");
    Integer r;
    mpz_mod(r.v_.get_mpz_t(), v_.get_mpz_t(), m.v_.get_mpz_t());
    return r;
}

Integer gcd(const Integer& a, const Integer& b) {
    return Integer(mpz_class(::gcd(a.raw(), b.raw())));
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

}  // namespace wilsonid
