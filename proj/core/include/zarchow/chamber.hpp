#pragma once

#include <utility>
#include <vector>

#include "zarchow/cone.hpp"
#include "zarchow/surface.hpp"
#include "zarchow/zariski.hpp"

namespace zarchow {

/// Locus (inside a big cone W) of divisors whose negative part is supported
/// on exactly the curves in gamma; a rational polyhedral cone.
struct Chamber {
    std::vector<std::size_t> gamma; // curve indices, sorted
    RationalCone cone;
};

/// Unique split D = F1 + F2 with F1 spanned by the gamma curves and F2
/// orthogonal to all of them. Requires the gamma Gram matrix to be negative
/// definite (otherwise the split is not unique); throws
/// "gamma-not-negative-definite".
std::pair<Divisor, Divisor> sigma_projection(const SurfaceLattice& s,
                                             const std::vector<std::size_t>& gamma,
                                             const Divisor& d);

/// Decomposition of a cone W of big divisors into Zariski chambers. Every
/// returned chamber is certified by decomposing an interior point; the
/// chambers cover W and have pairwise disjoint interiors. Deterministic:
/// sorted by gamma.
std::vector<Chamber> zariski_chambers(const SurfaceLattice& s, const RationalCone& w);

} // namespace zarchow
