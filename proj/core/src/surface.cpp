#include "zarchow/surface.hpp"

#include <algorithm>

#include "zarchow/errors.hpp"

namespace zarchow {

SurfaceLattice::SurfaceLattice(Mat form,
                               std::vector<std::string> basis_labels,
                               std::vector<Vec> curves,
                               std::vector<std::string> curve_labels)
    : form_(std::move(form)),
      basis_labels_(std::move(basis_labels)),
      curves_(std::move(curves)),
      curve_labels_(std::move(curve_labels)) {
    if (!form_.is_symmetric())
        throw DomainError("form-not-symmetric", "intersection form must be symmetric");
    if (basis_labels_.size() != form_.rows())
        throw DomainError("bad-surface", "basis label count must equal the lattice rank");
    if (curve_labels_.size() != curves_.size())
        throw DomainError("bad-surface", "curve label count must equal the curve count");
    for (std::size_t i = 0; i < curves_.size(); ++i) {
        if (curves_[i].size() != rank())
            throw DomainError("bad-surface",
                              "curve '" + curve_labels_[i] + "' has wrong dimension");
        if (curves_[i].is_zero())
            throw DomainError("bad-surface", "curve '" + curve_labels_[i] + "' is zero");
        if (!curves_[i].is_integral())
            throw DomainError("bad-surface",
                              "curve '" + curve_labels_[i] + "' must be integral");
        for (std::size_t j = 0; j < i; ++j)
            if (curves_[j] == curves_[i])
                throw DomainError("bad-surface", "duplicate curve class '" +
                                                     curve_labels_[i] + "'");
    }
}

Rational pair(const SurfaceLattice& s, const Divisor& d1, const Divisor& d2) {
    if (d1.size() != s.rank() || d2.size() != s.rank())
        throw DomainError("dimension-mismatch", "divisor dimension must equal lattice rank");
    return dot(d1, s.form() * d2);
}

bool is_nef(const SurfaceLattice& s, const Divisor& d) {
    for (const Vec& c : s.curves())
        if (pair(s, d, c) < Rational(0))
            return false;
    return true;
}

std::set<std::size_t> support(const SurfaceLattice& s, const Vec& curve_coeffs) {
    if (curve_coeffs.size() != s.curves().size())
        throw DomainError("dimension-mismatch",
                          "coefficient vector must have one entry per catalogued curve");
    std::set<std::size_t> out;
    for (std::size_t i = 0; i < curve_coeffs.size(); ++i) {
        if (curve_coeffs[i] < Rational(0))
            throw DomainError("not-effective-presentation",
                              "coefficient of curve '" + s.curve_labels()[i] +
                                  "' is negative");
        if (curve_coeffs[i] > Rational(0))
            out.insert(i);
    }
    return out;
}

Divisor combination_of_curves(const SurfaceLattice& s, const Vec& curve_coeffs) {
    if (curve_coeffs.size() != s.curves().size())
        throw DomainError("dimension-mismatch",
                          "coefficient vector must have one entry per catalogued curve");
    Divisor d(s.rank());
    for (std::size_t i = 0; i < curve_coeffs.size(); ++i)
        d += curve_coeffs[i] * s.curve(i);
    return d;
}

Mat gram(const SurfaceLattice& s, const std::vector<std::size_t>& curve_indices) {
    Mat g(curve_indices.size(), curve_indices.size());
    for (std::size_t i = 0; i < curve_indices.size(); ++i)
        for (std::size_t j = 0; j < curve_indices.size(); ++j)
            g(i, j) = pair(s, s.curve(curve_indices[i]), s.curve(curve_indices[j]));
    return g;
}

} // namespace zarchow
