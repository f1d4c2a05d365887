#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "zarchow/surface.hpp"

namespace zarchow {

/// Result of a Zariski decomposition D = P + N: P nef, N effective and
/// supported on curves whose Gram matrix is negative definite, P . N = 0.
struct ZariskiPair {
    Divisor p;
    Divisor n;
    std::vector<std::size_t> support;          // curves with positive coefficient, sorted
    std::map<std::size_t, Rational> coefficients; // coefficient per support curve
};

/// Computes the Zariski decomposition by the support-growing fixpoint: seed
/// the support with the curves D meets negatively, solve (D - N) . C = 0 on
/// the current support, then adjoin every curve the remainder still meets
/// negatively, until the remainder is nef. Fails loudly when the input is not
/// pseudo-effective relative to the catalogue.
///
/// Throws DomainError "not-pseudo-effective" when a solved coefficient turns
/// negative or a support Gram matrix is not negative definite, and
/// "inconsistent-catalogue" when a support system does not solve uniquely.
ZariskiPair zariski_decompose(const SurfaceLattice& s, const Divisor& d);

/// (P1 + P2) . (N1 + N2) == 0 for the two decompositions.
bool compatible(const SurfaceLattice& s, const Divisor& d1, const Divisor& d2);

/// Big relative to the catalogue: decomposes with P . P > 0.
bool is_big(const SurfaceLattice& s, const Divisor& d);

/// Supplies the exact fixed part of |D| for an integral divisor class D.
using FixedPartOracle = std::function<Divisor(const Divisor&)>;

/// The normalized fixed parts F_{|nD|} / n for n = 1..n_max, restricted to
/// those n with nD integral. Errors from the oracle propagate.
std::vector<std::pair<int, Divisor>>
asymptotic_fixed_part(const FixedPartOracle& oracle, const Divisor& d, int n_max);

} // namespace zarchow
