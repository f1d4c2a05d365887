#pragma once

#include <map>
#include <string>
#include <vector>

#include "zarchow/rational.hpp"

namespace zarchow {

/// Monomial exponent vector; entries may be negative (Laurent monomials in a
/// chosen lattice basis).
using ExpVec = std::vector<int>;

/// Integer-coefficient multivariate (Laurent) polynomial.
class MultiPoly {
public:
    explicit MultiPoly(std::size_t arity) : arity_(arity) {}
    static MultiPoly constant(std::size_t arity, const Integer& c);
    static MultiPoly monomial(ExpVec e, const Integer& c);

    std::size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ExpVec, Integer>& terms() const { return terms_; }

    void add_term(const ExpVec& e, const Integer& c);
    Integer coefficient(const ExpVec& e) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;

    /// Exponents translated by e.
    MultiPoly shifted(const ExpVec& e) const;
    /// Exponents mapped through an integer matrix (columns indexed by the old
    /// variables): e -> m * e. Used for declared basis changes.
    MultiPoly remapped(const std::vector<std::vector<int>>& m) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    /// Canonical form: terms graded-lexicographically sorted, "1 - 2*t + t^2"
    /// style; variables t for arity one, t1, t2, ... otherwise.
    std::string str() const;

private:
    std::size_t arity_;
    std::map<ExpVec, Integer> terms_; // no zero coefficients stored
};

std::string monomial_str(const ExpVec& e, std::size_t arity);

/// Graded-lexicographic order on exponent vectors (total degree first).
bool graded_lex_less(const ExpVec& a, const ExpVec& b);

} // namespace zarchow
