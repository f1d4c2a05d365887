#pragma once

#include <string>
#include <vector>

#include "zarchow/series.hpp"
#include "zarchow/surface.hpp"
#include "zarchow/zariski.hpp"

namespace zarchow {

/// Complete rational fan: primitive ray generators and maximal cones given as
/// ray index sets. Construction validates primitivity, full-dimensional
/// maximal cones, the face-to-face property of walls, and completeness
/// (every wall shared by exactly two maximal cones, plus membership
/// sampling).
struct Fan {
    std::size_t dim;
    std::vector<Vec> rays;
    std::vector<std::vector<std::size_t>> max_cones;
    std::vector<std::string> ray_names; // defaults e1, e2, ...
    bool complete = false;              // computed on construction

    Fan(std::size_t dim, std::vector<Vec> rays,
        std::vector<std::vector<std::size_t>> max_cones,
        std::vector<std::string> ray_names = {});
};

/// Torus-invariant divisor: one (rational) coefficient per ray.
struct ToricDivisor {
    std::vector<Rational> coeffs;
    bool is_integral() const;
};

/// Number of global sections: lattice points of the polytope
/// { u : <u, v_ray> >= -coeff(ray) }. Throws "unbounded-polytope" when the
/// rays do not positively span the ambient space.
Integer h0_toric(const Fan& f, const ToricDivisor& d);

/// Fixed part of |D|: the coefficient at a ray is the minimum of
/// <u, v_ray> + coeff(ray) over the lattice points of the section polytope.
/// Throws "empty-linear-series" when h0 = 0.
ToricDivisor fixed_part_toric(const Fan& f, const ToricDivisor& d);

/// Divisor class group presented on a free basis (torsion quotients are
/// rejected; smooth complete fans have free class groups).
struct DivisorClassGroup {
    std::size_t free_rank;
    Mat class_map; // free_rank x #rays, integer
    Mat section;   // #rays x free_rank integer right-inverse of class_map

    Vec class_of(const ToricDivisor& d) const;
    ToricDivisor lift(const Vec& klass) const; // integral representative
};

DivisorClassGroup divisor_class_group(const Fan& f);

/// Euler-Chow series in codimension one: product over the rays of
/// 1 / (1 - t^{class(D_ray)}), multivariate in the class basis; exponent
/// vectors may be Laurent.
RationalSeries euler_chow_divisors(const Fan& f);

/// Dimension-zero cycles: (1/(1-t))^{number of maximal cones}.
RationalSeries euler_chow_points(const Fan& f);

/// The fundamental class: 1/(1-t).
RationalSeries euler_chow_top(const Fan& f);

/// (1/(1-t))^{number of cones of dimension dim-p}, valid when the caller
/// asserts that the codimension-p cycle classes all coincide (true for
/// projective space). Requires a simplicial fan; rejects when the assertion
/// flag is absent.
RationalSeries euler_chow_rank_one(const Fan& f, int p, bool rank_one_asserted);

/// Number of cones of the given dimension in a simplicial fan (the origin
/// counts as the unique dimension-zero cone).
std::size_t cone_count(const Fan& f, std::size_t dimension);

/// Smooth complete surface fan bundled with its class group, the induced
/// divisor lattice (basis = class basis, curves = ray divisor classes), and
/// the exact oracles the decomposition and series machinery consume.
struct ToricSurface {
    Fan fan;
    DivisorClassGroup cl;
    SurfaceLattice lattice;

    Divisor ray_class(std::size_t ray) const;
    DivisorH0 h0_oracle() const;            // integral divisor class -> h0
    FixedPartOracle fixed_part_oracle() const; // integral class -> fixed part class
};

ToricSurface toric_surface(const Fan& f);

/// The induced divisor lattice alone. Throws "not-a-smooth-surface-fan" for
/// fans that are not smooth complete surfaces.
SurfaceLattice surface_lattice_from_fan(const Fan& f);

} // namespace zarchow
