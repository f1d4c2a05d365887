#pragma once

#include <set>
#include <string>
#include <vector>

#include "zarchow/linalg.hpp"

namespace zarchow {

/// Divisor class, as coordinates in the chosen basis of the divisor lattice.
using Divisor = Vec;

/// A smooth projective surface presented as its divisor lattice: a symmetric
/// integer intersection form together with a finite catalogue of classes of
/// known irreducible curves. Nefness and effectivity queries are relative to
/// the declared catalogue; the catalogue is assumed to contain every curve
/// that can appear with negative intersection (true for the toric surfaces
/// produced by this library, an input contract otherwise).
class SurfaceLattice {
public:
    SurfaceLattice(Mat form,
                   std::vector<std::string> basis_labels,
                   std::vector<Vec> curves,
                   std::vector<std::string> curve_labels);

    std::size_t rank() const { return form_.rows(); }
    const Mat& form() const { return form_; }
    const std::vector<std::string>& basis_labels() const { return basis_labels_; }
    const std::vector<Vec>& curves() const { return curves_; }
    const std::vector<std::string>& curve_labels() const { return curve_labels_; }
    const Vec& curve(std::size_t i) const { return curves_[i]; }

private:
    Mat form_;
    std::vector<std::string> basis_labels_;
    std::vector<Vec> curves_;
    std::vector<std::string> curve_labels_;
};

/// Intersection number D1 . D2.
Rational pair(const SurfaceLattice& s, const Divisor& d1, const Divisor& d2);

/// True iff D . C >= 0 for every catalogued curve C.
bool is_nef(const SurfaceLattice& s, const Divisor& d);

/// Support of an effective presentation: `curve_coeffs[i]` is the coefficient
/// of catalogued curve i. Returns the indices with strictly positive
/// coefficient; rejects negative coefficients.
std::set<std::size_t> support(const SurfaceLattice& s, const Vec& curve_coeffs);

/// Sum of coeffs[i] * curve_i.
Divisor combination_of_curves(const SurfaceLattice& s, const Vec& curve_coeffs);

/// Gram matrix of the curves with the given indices.
Mat gram(const SurfaceLattice& s, const std::vector<std::size_t>& curve_indices);

} // namespace zarchow
