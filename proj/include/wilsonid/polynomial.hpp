#pragma once

// Dense univariate polynomials over the rationals.
//
// Coefficients are stored in ascending order of power and kept canonical: the
// highest stored coefficient is never zero and the zero polynomial has no
// coefficients at all. Because every operation returns a canonical value,
// operator== is mathematical equality.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "wilsonid/rational.hpp"

namespace wilsonid {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs)
        : Polynomial(std::vector<Rational>(coeffs)) {}

    static Polynomial constant(const Rational& c);
    /// c * X^power
    static Polynomial monomial(std::size_t power, const Rational& c = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// Precondition: !is_zero().
    std::size_t degree() const;

    /// Coefficient of X^power; zero beyond the stored range.
    Rational coeff(std::size_t power) const;
    std::span<const Rational> coeffs() const { return coeffs_; }

    /// Coefficients rendered as "num/den" strings, ascending power.
    std::vector<std::string> to_strings() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// a*p + q
Polynomial poly_axpy(const Rational& a, const Polynomial& p, const Polynomial& q);

/// Schoolbook convolution.
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);

/// q(X) = p(X + c), expanding every (X + c)^k by the binomial theorem.
Polynomial poly_shift(const Polynomial& p, const Rational& c);

Polynomial poly_derivative(const Polynomial& p);

/// Horner evaluation.
Rational poly_eval(const Polynomial& p, const Rational& x);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace wilsonid
