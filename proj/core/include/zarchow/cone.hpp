#pragma once

#include <vector>

#include "zarchow/linalg.hpp"

namespace zarchow {

/// Finitely generated rational polyhedral cone with both descriptions kept in
/// sync: generators (primitive integer, duplicates on a ray collapsed) and an
/// exact H-representation (facet inequalities plus span equations), computed
/// by Fourier-Motzkin elimination and cross-checked on construction.
class RationalCone {
public:
    /// V-representation constructor. Generator order is preserved (it is the
    /// placing order used by triangulate).
    static RationalCone from_generators(std::size_t ambient_dim, std::vector<Vec> gens);

    /// H-representation constructor: { x : n.x >= 0, e.x = 0 }. The generator
    /// list of the result is sorted lexicographically.
    static RationalCone from_inequalities(std::size_t ambient_dim,
                                          const std::vector<Vec>& normals,
                                          const std::vector<Vec>& equations = {});

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return dim_; }
    bool is_zero_cone() const { return dim_ == 0; }
    /// True when the generator list itself is a simplicial set.
    bool is_simplicial() const { return gens_.size() == dim_; }

    const std::vector<Vec>& generators() const { return gens_; }
    /// Irredundant facet inequalities (inner normals, primitive integer,
    /// orthogonal to the span complement, sorted).
    const std::vector<Vec>& facets() const { return facets_; }
    /// Equations cutting out the linear span, reduced and sorted.
    const std::vector<Vec>& equations() const { return equations_; }

    bool contains(const Vec& p) const;
    bool contains_cone(const RationalCone& other) const;

    /// Smallest face containing p (active-facet intersection).
    /// Throws DomainError "not-in-cone" when p lies outside.
    RationalCone minimal_face(const Vec& p) const;

    /// p is at least as general as q: the minimal face of p contains the
    /// minimal face of q (equivalently r*p - q stays in the cone for some
    /// r > 0). Throws "not-in-cone" when either point lies outside.
    bool is_more_general(const Vec& p, const Vec& q) const;

    RationalCone intersect(const RationalCone& other) const;

    /// Sum of the generators; lies in the relative interior (zero for the
    /// zero cone).
    Vec relative_interior_point() const;

    friend bool operator==(const RationalCone& a, const RationalCone& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.equations_ == b.equations_ &&
               a.facets_ == b.facets_;
    }

private:
    RationalCone() = default;
    std::vector<std::size_t> active_facets(const Vec& p) const;

    std::size_t ambient_dim_ = 0;
    std::size_t dim_ = 0;
    std::vector<Vec> gens_;
    std::vector<Vec> facets_;
    std::vector<Vec> equations_;
};

/// Cone spanned by linearly independent integer generators.
struct SimplicialCone {
    std::vector<Vec> gens;

    explicit SimplicialCone(std::vector<Vec> generators);
    std::size_t ambient_dim() const { return gens.empty() ? 0 : gens[0].size(); }
};

/// Placing triangulation in generator order: simplicial cones covering the
/// input, pairwise intersecting in common faces, generators drawn from the
/// input generator list. The zero cone yields an empty list.
std::vector<SimplicialCone> triangulate(const RationalCone& v);

/// Integer points { sum lambda_i v_i : 0 <= lambda_i < 1 } of a simplicial
/// cone with integral generators, sorted lexicographically. Every lattice
/// point of the cone then decomposes uniquely as one of these plus a
/// nonnegative integer combination of the generators.
std::vector<Vec> fundamental_parallelepiped(const SimplicialCone& s);

} // namespace zarchow
