#pragma once

// Arbitrary-precision signed integer. Thin value wrapper over GMP's mpz_class
// so that the rest of the library never touches GMP directly.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wilsonid {

class Integer {
public:
    Integer() = default;
    Integer(std::int64_t v);  // NOLINT(google-explicit-constructor)
    explicit Integer(mpz_class v) : v_(std::move(v)) {}

    /// Parses an optionally signed decimal literal. Throws std::invalid_argument
    /// on anything else (whitespace, '+', hex, exponents...).
    static Integer parse(std::string_view text);

    std::string to_string() const { return v_.get_str(10); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }

    bool fits_int64() const;
    bool fits_uint64() const;
    std::int64_t to_int64() const;    // precondition: fits_int64()
    std::uint64_t to_uint64() const;  // precondition: fits_uint64()

    Integer abs() const { return Integer(mpz_class(::abs(v_))); }
    Integer pow(std::uint64_t exp) const;

    /// Exact division; the divisor must divide *this.
    Integer div_exact(const Integer& d) const;

    /// Least non-negative residue modulo m (m > 0).
    Integer mod(const Integer& m) const;

    const mpz_class& raw() const { return v_; }

    Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
    Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
    Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
    friend Integer operator-(const Integer& a) { return Integer(mpz_class(-a.v_)); }

    friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpz_class v_;
};

Integer gcd(const Integer& a, const Integer& b);

std::ostream& operator<<(std::ostream& os, const Integer& v);

}  // namespace wilsonid
