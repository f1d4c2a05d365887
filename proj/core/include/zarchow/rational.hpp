#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "zarchow/errors.hpp"

namespace zarchow {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Exact rational scalar. Always in lowest terms with positive denominator;
/// every operation is exact (no rounding anywhere in the library).
class Rational {
public:
    Rational() = default;
    Rational(int n) : q_(n) {}
    Rational(long long n) : q_(n) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long long num, long long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "7", "-7", "3/2", "-3/2". Throws DomainError("bad-rational") otherwise.
    static Rational parse(const std::string& s);

    Integer numerator() const { return boost::multiprecision::numerator(q_); }
    Integer denominator() const { return boost::multiprecision::denominator(q_); }

    bool is_zero() const { return q_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return q_.sign(); }

    Integer floor() const;
    Integer ceil() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    /// "3/2", "-3/2", "7" (integers print without the denominator).
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    using Impl = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
    Impl q_; // canonical by construction; all mpq ops preserve canonical form
};

/// Narrowing with a range check; throws DomainError("integer-overflow").
long long to_int64(const Integer& z);

Integer gcd_int(const Integer& a, const Integer& b);
Integer lcm_int(const Integer& a, const Integer& b);

} // namespace zarchow
