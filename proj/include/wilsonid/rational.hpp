#pragma once

// Exact rational number, always held in canonical form: positive denominator,
// numerator and denominator coprime, zero as 0/1.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "wilsonid/integer.hpp"

namespace wilsonid {

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t v) : v_(Integer(v).raw()) {}  // NOLINT
    Rational(const Integer& v) : v_(v.raw()) {}                     // NOLINT

    /// Canonical num/den. Throws std::domain_error when den is zero.
    static Rational make(const Integer& num, const Integer& den);

    /// Accepts "a" or "a/b" with decimal integer components. Floating-point
    /// literals are rejected. Throws std::invalid_argument on malformed text
    /// and std::domain_error on a zero denominator.
    static Rational parse(std::string_view text);

    /// Always "num/den", including "n/1" for integral values.
    std::string to_string() const;

    Integer numerator() const { return Integer(mpz_class(v_.get_num())); }
    Integer denominator() const { return Integer(mpz_class(v_.get_den())); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// Non-negative integer power; num and den stay coprime so no reduction runs.
    Rational pow(std::uint64_t exp) const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.v_ = -a.v_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace wilsonid
