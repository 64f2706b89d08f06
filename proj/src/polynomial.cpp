#include "wilsonid/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "wilsonid/combinatorics.hpp"

namespace wilsonid {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(std::size_t power, const Rational& c) {
    std::vector<Rational> coeffs(power + 1);
    coeffs[power] = c;
    return Polynomial(std::move(coeffs));
}

std::size_t Polynomial::degree() const {
    if (is_zero()) throw std::domain_error("degree of the zero polynomial is undefined");
    return coeffs_.size() - 1;
}

Rational Polynomial::coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational();
}

std::vector<std::string> Polynomial::to_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.to_string());
    return out;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial poly_axpy(const Rational& a, const Polynomial& p, const Polynomial& q) {
    if (a.is_zero()) return q;
    const auto ps = p.coeffs();
    const auto qs = q.coeffs();
    std::vector<Rational> out(std::max(ps.size(), qs.size()));
    std::copy(qs.begin(), qs.end(), out.begin());
    for (std::size_t k = 0; k < ps.size(); ++k) out[k] += a * ps[k];
    return Polynomial(std::move(out));
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    const auto ps = p.coeffs();
    const auto qs = q.coeffs();
    std::vector<Rational> out(ps.size() + qs.size() - 1);
    for (std::size_t a = 0; a < ps.size(); ++a) {
        if (ps[a].is_zero()) continue;
        for (std::size_t b = 0; b < qs.size(); ++b) out[a + b] += ps[a] * qs[b];
    }
    return Polynomial(std::move(out));
}

Polynomial poly_shift(const Polynomial& p, const Rational& c) {
    if (c.is_zero() || p.is_constant()) return p;
    const auto ps = p.coeffs();
    std::vector<Rational> out(ps.size());
    // Powers of c are shared by every term: c^0 .. c^deg.
    std::vector<Rational> c_pow(ps.size());
    c_pow[0] = Rational(1);
    for (std::size_t e = 1; e < ps.size(); ++e) c_pow[e] = c_pow[e - 1] * c;

    // a_k (X + c)^k = a_k sum_m C(k, m) c^(k-m) X^m
    for (std::size_t k = 0; k < ps.size(); ++k) {
        if (ps[k].is_zero()) continue;
        const auto row = binomial_row(static_cast<std::int64_t>(k));
        for (std::size_t m = 0; m <= k; ++m) {
            out[m] += ps[k] * Rational(row[m]) * c_pow[k - m];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial poly_derivative(const Polynomial& p) {
    const auto ps = p.coeffs();
    if (ps.size() <= 1) return {};
    std::vector<Rational> out(ps.size() - 1);
    for (std::size_t k = 1; k < ps.size(); ++k) {
        out[k - 1] = ps[k] * Rational(static_cast<std::int64_t>(k));
    }
    return Polynomial(std::move(out));
}

Rational poly_eval(const Polynomial& p, const Rational& x) {
    const auto ps = p.coeffs();
    Rational acc;
    for (auto it = ps.rbegin(); it != ps.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    os << '[';
    const auto cs = p.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (k != 0) os << ", ";
        os << cs[k];
    }
    return os << ']';
}

}  // namespace wilsonid
