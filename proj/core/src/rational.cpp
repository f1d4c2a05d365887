#include "zarchow/rational.hpp"

#include <limits>
#include <ostream>

namespace zarchow {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den.is_zero())
        throw DomainError("division-by-zero", "rational with zero denominator");
    // mpq_div canonicalizes; the (num, den) constructor of the backend does not.
    q_ = Impl(num) / Impl(den);
}

Rational Rational::parse(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw DomainError("bad-rational", "cannot parse '" + s + "'");
    }
}

Integer Rational::floor() const {
    Integer num = numerator(), den = denominator();
    Integer q = num / den; // truncates toward zero
    if (num < 0 && q * den != num)
        --q;
    return q;
}

Integer Rational::ceil() const {
    Integer num = numerator(), den = denominator();
    Integer q = num / den;
    if (num > 0 && q * den != num)
        ++q;
    return q;
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw DomainError("division-by-zero", "rational division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer())
        return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

long long to_int64(const Integer& z) {
    if (z > Integer(std::numeric_limits<long long>::max()) ||
        z < Integer(std::numeric_limits<long long>::min()))
        throw DomainError("integer-overflow", "value does not fit in 64 bits");
    return z.convert_to<long long>();
}

Integer gcd_int(const Integer& a, const Integer& b) { return gcd(a, b); }
Integer lcm_int(const Integer& a, const Integer& b) { return lcm(a, b); }

} // namespace zarchow
