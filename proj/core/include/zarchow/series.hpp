#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zarchow/cone.hpp"
#include "zarchow/poly.hpp"
#include "zarchow/surface.hpp"

namespace zarchow {

/// One denominator factor (1 - t^v)^m.
struct DenomFactor {
    ExpVec v;
    int mult;
    friend bool operator==(const DenomFactor& a, const DenomFactor& b) {
        return a.v == b.v && a.mult == b.mult;
    }
};

/// Multivariate rational function written as an integer polynomial over a
/// product of factors (1 - t^v)^m. Kept in canonical form: factors merged by
/// v, sorted lexicographically; the zero numerator clears the denominator.
/// Factors whose exponent vector is not lexicographically positive mark the
/// series as Laurent.
class RationalSeries {
public:
    explicit RationalSeries(std::size_t arity)
        : num_(MultiPoly(arity)), arity_(arity) {}
    RationalSeries(MultiPoly num, std::vector<DenomFactor> den);

    static RationalSeries zero(std::size_t arity) { return RationalSeries(arity); }
    static RationalSeries monomial(const ExpVec& e, const Integer& c);

    std::size_t arity() const { return arity_; }
    const MultiPoly& numerator() const { return num_; }
    const std::vector<DenomFactor>& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return laurent_; }

    /// The verification window this series was certified on, when it came out
    /// of a multiply-truncate-verify rationalization.
    std::optional<int> certified_window() const { return certified_window_; }
    void set_certified_window(int w) { certified_window_ = w; }

    RationalSeries& operator+=(const RationalSeries& o);
    RationalSeries& operator-=(const RationalSeries& o);
    friend RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
    friend RationalSeries operator-(RationalSeries a, const RationalSeries& b) { return a -= b; }

    /// Multiplication by a monomial t^e.
    RationalSeries shifted(const ExpVec& e) const;
    /// Numerator multiplied by a polynomial (same denominator).
    RationalSeries scaled(const MultiPoly& p) const;
    /// Exponent lattice basis change e -> m e (m unimodular integer rows).
    RationalSeries remapped(const std::vector<std::vector<int>>& m) const;

    /// Canonical-form equality (numerator and factor list).
    friend bool operator==(const RationalSeries& a, const RationalSeries& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// "(1 + t^2) / ((1 - t)^2 (1 - t^3))"; numerator graded-lex sorted,
    /// factors lex-sorted by v then m.
    std::string str() const;

private:
    MultiPoly num_;
    std::vector<DenomFactor> den_;
    std::size_t arity_ = 0;
    bool laurent_ = false;
    std::optional<int> certified_window_;
    void canonicalize();
};

// --- expansion -------------------------------------------------------------

/// Exact coefficients of all monomials with grading . e <= degree_bound. The
/// grading (all-ones by default) must be strictly positive on every
/// denominator exponent vector; otherwise the expansion order is not locally
/// finite and a shift certificate (an explicit positive grading) is required:
/// throws DomainError "laurent-shift-required".
std::map<ExpVec, Integer> expand(const RationalSeries& r, long degree_bound,
                                 const std::vector<long>& grading = {});

/// Single-variable convenience: coefficients 0..degree_bound.
std::vector<Integer> expand1(const RationalSeries& r, int degree_bound);

// --- quasi-polynomial fitting ----------------------------------------------

/// Degree-2 quasi-polynomial: value(n) = a(n) n^2 + b(n) n + c(n) with
/// period-r coefficient functions, valid exactly for all sampled n >= onset.
struct QuasiPolynomial {
    int period = 1;
    int onset = 0;
    std::vector<std::array<Rational, 3>> coeffs; // [residue] -> (a, b, c)

    Rational value(long n) const;
    bool constant_a() const;
    bool constant_b() const;
};

/// Smallest period r <= max_period (and, for it, the smallest onset) such
/// that every residue class fits a degree-<=2 polynomial exactly on all
/// provided n >= onset; each class must keep at least three points beyond the
/// onset to pin the fit down. Never approximates: throws DomainError
/// "no-fit" when no period works.
QuasiPolynomial quasi_poly_fit(const std::vector<Integer>& values, int max_period);

// --- rationalization -------------------------------------------------------

/// h(n) = coefficient oracle of a single-variable series.
using SeqOracle = std::function<Integer(int)>;
/// Multivariate oracle indexed by ambient lattice points.
using H0Oracle = std::function<Integer(const ExpVec&)>;
/// Divisor-level section-count oracle on integral divisor classes.
using DivisorH0 = std::function<Integer(const Divisor&)>;

struct SeriesOptions {
    int window_mult = 3;  // verification window = window_mult * numerator box
    int max_box_growth = 8; // extra numerator degree allowed beyond the default
    int chop_cap = 8;     // largest low-index strip width searched
    int shift_cap = 60;   // largest compatibility shift searched
};

/// Rationalizes sum h(n) t^n as f / (1-t^r)^3, or f / ((1-t)^2 (1-t^r)) when
/// the divisor is known to be effective. The period r is found by trying the
/// divisors of r_hint in ascending order; each candidate is certified by
/// multiply-truncate-verify on an explicit window (default three times the
/// numerator degree). Throws "not-rational-within-window" when no candidate
/// verifies.
RationalSeries poincare_series(const SeqOracle& h, bool effective, int r_hint,
                               const SeriesOptions& opts = {});

/// Lattice-point generating series of a simplicial cone with integral
/// generators, weighted by h: splits into fundamental-parallelepiped cosets
/// and rationalizes each against the candidate denominator
/// prod_i (1 - t^{v_i})^3, verified on a window. Throws
/// "coset-not-rational-within-window".
RationalSeries cone_series(const SimplicialCone& s, const H0Oracle& h,
                           const SeriesOptions& opts = {});

/// Alternating inclusion-exclusion over all nonempty subsets of the cones;
/// each intersection is triangulated and summed with cone_series. Counts
/// every lattice point of the union exactly once.
RationalSeries inclusion_exclusion(const std::vector<RationalCone>& cones,
                                   const H0Oracle& h, const SeriesOptions& opts = {});

/// Per-step diagnostics of the chamber reduction (values of the searched
/// shifts and strip widths), for logging.
struct ChamberDiagnostics {
    std::vector<std::string> notes;
};

/// Multi-variable series sum_{m in N^l} h0(D + sum m_i B_i) t^m for big
/// divisors B_i, computed through the Zariski-chamber reduction: chamber
/// decomposition of cone(B_i), pullback and triangulation in index space,
/// denominator clearing, compatibility shifts reducing evaluation to nef
/// parts, and inclusion-exclusion over chamber overlaps. D and the B_i must
/// be integral.
RationalSeries chamber_reduced_series(const SurfaceLattice& s, const Divisor& d,
                                      const std::vector<Divisor>& bigs,
                                      const DivisorH0& h0,
                                      const SeriesOptions& opts = {},
                                      ChamberDiagnostics* diag = nullptr);

/// Window-certified direct rationalization of a table oracle over N^arity
/// with candidate denominator prod_i (1 - t_i^p)^3, p running over the
/// divisors of period_hint. The fallback for inputs outside the big-divisor
/// reduction; the result is labeled with its verification window.
RationalSeries direct_rationalize(std::size_t arity, const H0Oracle& h, int period_hint,
                                  const SeriesOptions& opts = {});

} // namespace zarchow
