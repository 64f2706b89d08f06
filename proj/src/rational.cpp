#include "wilsonid/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace wilsonid {

Rational Rational::make(const Integer& num, const Integer& den) {
    if (den.is_zero()) throw std::domain_error("rational with zero denominator");
    Rational r;
    r.v_ = mpq_class(num.raw(), den.raw());
    r.v_.canonicalize();
    return r;
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(Integer::parse(text));
    try {
        return make(Integer::parse(text.substr(0, slash)), Integer::parse(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
}

std::string Rational::to_string() const {
    return v_.get_num().get_str(10) + "/" + v_.get_den().get_str(10);
}

Rational Rational::pow(std::uint64_t exp) const {
    Rational r;
    mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(), exp);
    mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(), exp);
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace wilsonid
