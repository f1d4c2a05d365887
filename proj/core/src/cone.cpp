#include "zarchow/cone.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "zarchow/errors.hpp"

namespace zarchow {

namespace {

// --- Fourier-Motzkin projection -------------------------------------------
//
// The cone spanned by g_1..g_k is the projection of
//     { (x, l) : x - sum l_i g_i = 0, l >= 0 }
// onto x. Equalities are used as exact substitutions; the remaining l
// variables are eliminated pairwise. Rows are kept primitive and deduplicated
// after every step, which is all the redundancy control these sizes need.

struct FmRow {
    Vec v; // length n + k: x-part then lambda-part
};

Vec fm_combine(const Vec& pos, const Vec& neg, std::size_t col) {
    // pos[col] > 0, neg[col] < 0; eliminate column col by a positive combination.
    const Rational a = pos[col];
    const Rational b = -neg[col];
    Vec r(pos.size());
    for (std::size_t j = 0; j < pos.size(); ++j)
        r[j] = a * neg[j] + b * pos[j];
    return primitive(r);
}

std::vector<Vec> fm_project(std::size_t n, const std::vector<Vec>& gens) {
    const std::size_t k = gens.size();
    const std::size_t width = n + k;

    std::vector<Vec> equalities;
    for (std::size_t j = 0; j < n; ++j) {
        Vec row(width);
        row[j] = Rational(1);
        for (std::size_t i = 0; i < k; ++i)
            row[n + i] = -gens[i][j];
        equalities.push_back(row);
    }
    std::vector<Vec> ineqs;
    for (std::size_t i = 0; i < k; ++i) {
        Vec row(width);
        row[n + i] = Rational(1);
        ineqs.push_back(row);
    }

    std::vector<bool> eliminated(k, false);
    // Substitute equalities away wherever they still mention a lambda.
    for (auto& eq : equalities) {
        std::size_t col = width;
        for (std::size_t i = 0; i < k; ++i)
            if (!eliminated[i] && !eq[n + i].is_zero()) {
                col = n + i;
                break;
            }
        if (col == width)
            continue; // x-only equality; the span equations cover it
        eliminated[col - n] = true;
        const Vec pivot = eq;
        auto substitute = [&](Vec& row) {
            if (row[col].is_zero())
                return;
            const Rational f = row[col] / pivot[col];
            for (std::size_t j = 0; j < width; ++j)
                row[j] -= f * pivot[j];
        };
        for (auto& other : equalities)
            if (&other != &eq)
                substitute(other);
        for (auto& row : ineqs)
            substitute(row);
        eq = Vec(width); // consumed
    }

    auto tidy = [&](std::vector<Vec>& rows) {
        for (auto& r : rows)
            r = primitive(r);
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
        rows.erase(std::remove_if(rows.begin(), rows.end(),
                                  [](const Vec& r) { return r.is_zero(); }),
                   rows.end());
    };
    tidy(ineqs);

    for (std::size_t i = 0; i < k; ++i) {
        if (eliminated[i])
            continue;
        const std::size_t col = n + i;
        std::vector<Vec> keep, pos, neg;
        for (const auto& row : ineqs) {
            if (row[col].is_zero())
                keep.push_back(row);
            else if (row[col] > Rational(0))
                pos.push_back(row);
            else
                neg.push_back(row);
        }
        for (const auto& p : pos)
            for (const auto& q : neg)
                keep.push_back(fm_combine(p, q, col));
        ineqs = std::move(keep);
        tidy(ineqs);
    }

    // Truncate to the x-part; lambda coefficients are all zero now.
    std::vector<Vec> out;
    for (const auto& row : ineqs) {
        Vec x(n);
        for (std::size_t j = 0; j < n; ++j)
            x[j] = row[j];
        if (!x.is_zero())
            out.push_back(primitive(x));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Orthogonal projection of h onto span(gens), as a primitive integer vector.
// Inner products against the span are preserved, which is all that matters
// for a supporting inequality.
Vec project_to_span(const Vec& h, const std::vector<Vec>& gens) {
    const std::vector<std::size_t> idx = independent_subset(gens);
    if (idx.empty())
        return Vec(h.size());
    Mat g(idx.size(), idx.size());
    Vec rhs(idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = 0; b < idx.size(); ++b)
            g(a, b) = dot(gens[idx[a]], gens[idx[b]]);
        rhs[a] = dot(h, gens[idx[a]]);
    }
    const SolveResult res = solve_linear(g, rhs);
    if (res.status != SolveStatus::unique)
        throw DomainError("cone-internal", "singular Gram matrix of independent vectors");
    Vec p(h.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
        p += res.solution[a] * gens[idx[a]];
    return primitive(p);
}

} // namespace

RationalCone RationalCone::from_generators(std::size_t ambient_dim, std::vector<Vec> gens) {
    RationalCone c;
    c.ambient_dim_ = ambient_dim;

    for (auto& g : gens) {
        if (g.size() != ambient_dim)
            throw DomainError("dimension-mismatch", "cone generator has wrong dimension");
        g = primitive(g);
    }
    for (const auto& g : gens) {
        if (g.is_zero())
            continue;
        if (std::find(c.gens_.begin(), c.gens_.end(), g) == c.gens_.end())
            c.gens_.push_back(g);
    }

    if (c.gens_.empty()) {
        c.dim_ = 0;
        for (std::size_t j = 0; j < ambient_dim; ++j)
            c.equations_.push_back(Vec::unit(ambient_dim, j));
        return c;
    }

    c.equations_ = nullspace(Mat::from_row_vecs(c.gens_));
    std::sort(c.equations_.begin(), c.equations_.end());
    c.dim_ = ambient_dim - c.equations_.size();

    const std::vector<Vec> candidates = fm_project(ambient_dim, c.gens_);
    std::set<Vec> facet_set;
    for (const Vec& h : candidates) {
        std::vector<Vec> active;
        bool valid = true;
        bool strict = false;
        for (const Vec& g : c.gens_) {
            const Rational v = dot(h, g);
            if (v < Rational(0)) {
                valid = false;
                break;
            }
            if (v.is_zero())
                active.push_back(g);
            else
                strict = true;
        }
        if (!valid)
            throw DomainError("cone-internal", "projection produced an invalid inequality");
        if (!strict)
            continue; // vanishes on the whole cone: an equation, not a facet
        if (rank_of(active) + 1 != c.dim_)
            continue; // supports a lower-dimensional face only
        facet_set.insert(project_to_span(h, c.gens_));
    }
    // A full-dimensional simplicial bit of bookkeeping: dimension 1 cones
    // have the origin as their single facet; fm_project yields a strict
    // inequality for it and the rank test above (rank 0 == dim-1) keeps it.
    c.facets_.assign(facet_set.begin(), facet_set.end());

    for (const Vec& g : c.gens_) {
        for (const Vec& e : c.equations_)
            if (!dot(e, g).is_zero())
                throw DomainError("cone-internal", "generator violates a span equation");
        for (const Vec& h : c.facets_)
            if (dot(h, g) < Rational(0))
                throw DomainError("cone-internal", "generator violates a facet");
    }
    return c;
}

RationalCone RationalCone::from_inequalities(std::size_t ambient_dim,
                                             const std::vector<Vec>& normals,
                                             const std::vector<Vec>& equations) {
    // Dual pass: the generators of { x : n.x >= 0, e.x = 0 } are the facet
    // normals and (signed) span equations of the cone spanned by the normals.
    std::vector<Vec> dual_gens;
    for (const Vec& h : normals)
        dual_gens.push_back(h);
    for (const Vec& e : equations) {
        dual_gens.push_back(e);
        dual_gens.push_back(-e);
    }
    const RationalCone dual = RationalCone::from_generators(ambient_dim, dual_gens);
    std::vector<Vec> gens = dual.facets();
    for (const Vec& e : dual.equations()) {
        gens.push_back(e);
        gens.push_back(primitive(-e));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return RationalCone::from_generators(ambient_dim, gens);
}

bool RationalCone::contains(const Vec& p) const {
    if (p.size() != ambient_dim_)
        throw DomainError("dimension-mismatch", "point has wrong dimension");
    for (const Vec& e : equations_)
        if (!dot(e, p).is_zero())
            return false;
    for (const Vec& h : facets_)
        if (dot(h, p) < Rational(0))
            return false;
    return true;
}

bool RationalCone::contains_cone(const RationalCone& other) const {
    for (const Vec& g : other.generators())
        if (!contains(g))
            return false;
    return true;
}

std::vector<std::size_t> RationalCone::active_facets(const Vec& p) const {
    if (!contains(p))
        throw DomainError("not-in-cone", "point " + p.str() + " is not in the cone");
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < facets_.size(); ++i)
        if (dot(facets_[i], p).is_zero())
            active.push_back(i);
    return active;
}

RationalCone RationalCone::minimal_face(const Vec& p) const {
    const std::vector<std::size_t> active = active_facets(p);
    std::vector<Vec> face_gens;
    for (const Vec& g : gens_) {
        bool on_face = true;
        for (std::size_t i : active)
            if (!dot(facets_[i], g).is_zero()) {
                on_face = false;
                break;
            }
        if (on_face)
            face_gens.push_back(g);
    }
    return RationalCone::from_generators(ambient_dim_, face_gens);
}

bool RationalCone::is_more_general(const Vec& p, const Vec& q) const {
    const std::vector<std::size_t> ap = active_facets(p);
    const std::vector<std::size_t> aq = active_facets(q);
    return std::includes(aq.begin(), aq.end(), ap.begin(), ap.end());
}

RationalCone RationalCone::intersect(const RationalCone& other) const {
    if (ambient_dim_ != other.ambient_dim_)
        throw DomainError("dimension-mismatch", "cone intersection across ambient spaces");
    std::vector<Vec> normals = facets_;
    normals.insert(normals.end(), other.facets_.begin(), other.facets_.end());
    std::vector<Vec> eqs = equations_;
    eqs.insert(eqs.end(), other.equations_.begin(), other.equations_.end());
    return from_inequalities(ambient_dim_, normals, eqs);
}

Vec RationalCone::relative_interior_point() const {
    Vec p(ambient_dim_);
    for (const Vec& g : gens_)
        p += g;
    return p;
}

SimplicialCone::SimplicialCone(std::vector<Vec> generators) : gens(std::move(generators)) {
    if (!gens.empty() && rank_of(gens) != gens.size())
        throw DomainError("not-simplicial", "generators are linearly dependent");
}

namespace {

// Unique coordinates of p in the span of the (independent) generators, if p
// lies in that span.
std::optional<Vec> coords_in(const std::vector<Vec>& gens, const Vec& p) {
    const Mat m = Mat::from_row_vecs(gens).transposed();
    const SolveResult res = solve_linear(m, p);
    if (res.status == SolveStatus::unique)
        return res.solution;
    return std::nullopt;
}

// Inner normal, within span(all placed generators), of the facet of a
// simplex obtained by omitting one generator. Positive on the omitted one.
Vec simplex_facet_normal(const std::vector<Vec>& simplex_gens, std::size_t omit) {
    Mat g(simplex_gens.size(), simplex_gens.size());
    for (std::size_t a = 0; a < simplex_gens.size(); ++a)
        for (std::size_t b = 0; b < simplex_gens.size(); ++b)
            g(a, b) = dot(simplex_gens[a], simplex_gens[b]);
    Vec rhs(simplex_gens.size());
    rhs[omit] = Rational(1);
    const SolveResult res = solve_linear(g, rhs);
    if (res.status != SolveStatus::unique)
        throw DomainError("cone-internal", "degenerate simplex Gram matrix");
    Vec h(simplex_gens[0].size());
    for (std::size_t a = 0; a < simplex_gens.size(); ++a)
        h += res.solution[a] * simplex_gens[a];
    return h;
}

} // namespace

std::vector<SimplicialCone> triangulate(const RationalCone& v) {
    const std::vector<Vec>& gens = v.generators();
    if (gens.empty())
        return {};

    // Incremental placing in input order. Each simplex is a sorted list of
    // generator indices; inserting a generator outside the current span
    // extends every simplex, inserting one outside the current cone glues a
    // new simplex onto every visible boundary facet.
    std::vector<std::vector<std::size_t>> simplices;
    std::vector<std::size_t> placed;
    std::vector<Vec> placed_gens;

    for (std::size_t idx = 0; idx < gens.size(); ++idx) {
        const Vec& g = gens[idx];
        if (simplices.empty()) {
            simplices.push_back({idx});
            placed.push_back(idx);
            placed_gens.push_back(g);
            continue;
        }
        if (rank_of(placed_gens) != rank_of([&] {
                auto all = placed_gens;
                all.push_back(g);
                return all;
            }())) {
            // Span grows: every simplex gains the new generator.
            for (auto& s : simplices)
                s.push_back(idx);
        } else {
            // In-span: skip when covered, otherwise attach to visible facets.
            bool covered = false;
            for (const auto& s : simplices) {
                std::vector<Vec> sg;
                for (std::size_t i : s)
                    sg.push_back(gens[i]);
                if (auto c = coords_in(sg, g)) {
                    bool nonneg = true;
                    for (std::size_t a = 0; a < c->size(); ++a)
                        if ((*c)[a] < Rational(0)) {
                            nonneg = false;
                            break;
                        }
                    if (nonneg) {
                        covered = true;
                        break;
                    }
                }
            }
            if (!covered) {
                // Boundary facets: (s-1)-subsets owned by exactly one simplex.
                std::map<std::vector<std::size_t>, std::vector<std::size_t>> owners;
                for (std::size_t si = 0; si < simplices.size(); ++si) {
                    const auto& s = simplices[si];
                    for (std::size_t omit = 0; omit < s.size(); ++omit) {
                        std::vector<std::size_t> f;
                        for (std::size_t a = 0; a < s.size(); ++a)
                            if (a != omit)
                                f.push_back(s[a]);
                        owners[f].push_back(si);
                    }
                }
                std::vector<std::vector<std::size_t>> fresh;
                for (const auto& [facet, who] : owners) {
                    if (who.size() != 1)
                        continue;
                    const auto& s = simplices[who[0]];
                    std::size_t omit_pos = 0;
                    for (std::size_t a = 0; a < s.size(); ++a)
                        if (std::find(facet.begin(), facet.end(), s[a]) == facet.end())
                            omit_pos = a;
                    std::vector<Vec> sg;
                    for (std::size_t i : s)
                        sg.push_back(gens[i]);
                    const Vec h = simplex_facet_normal(sg, omit_pos);
                    if (dot(h, g) < Rational(0)) {
                        std::vector<std::size_t> ns = facet;
                        ns.push_back(idx);
                        std::sort(ns.begin(), ns.end());
                        fresh.push_back(ns);
                    }
                }
                simplices.insert(simplices.end(), fresh.begin(), fresh.end());
            }
        }
        placed.push_back(idx);
        placed_gens.push_back(g);
    }

    std::vector<SimplicialCone> out;
    for (const auto& s : simplices) {
        std::vector<Vec> sg;
        for (std::size_t i : s)
            sg.push_back(gens[i]);
        out.emplace_back(std::move(sg));
    }
    return out;
}

std::vector<Vec> fundamental_parallelepiped(const SimplicialCone& s) {
    if (s.gens.empty())
        return {Vec(0)};
    const std::size_t n = s.ambient_dim();
    for (const Vec& g : s.gens)
        if (!g.is_integral())
            throw DomainError("not-integral", "parallelepiped needs integral generators");

    // Coordinate-wise bounding box of the closed parallelepiped.
    std::vector<Integer> lo(n, Integer(0)), hi(n, Integer(0));
    for (std::size_t j = 0; j < n; ++j)
        for (const Vec& g : s.gens) {
            const Integer x = g[j].numerator();
            if (x < 0)
                lo[j] += x;
            else
                hi[j] += x;
        }

    std::vector<Vec> out;
    Vec p(n);
    std::vector<Integer> cur = lo;
    for (;;) {
        for (std::size_t j = 0; j < n; ++j)
            p[j] = Rational(cur[j]);
        if (auto c = coords_in(s.gens, p)) {
            bool in_box = true;
            for (std::size_t a = 0; a < c->size(); ++a)
                if ((*c)[a] < Rational(0) || (*c)[a] >= Rational(1)) {
                    in_box = false;
                    break;
                }
            if (in_box)
                out.push_back(p);
        }
        // Odometer increment over the box.
        std::size_t j = 0;
        while (j < n) {
            if (cur[j] < hi[j]) {
                ++cur[j];
                break;
            }
            cur[j] = lo[j];
            ++j;
        }
        if (j == n)
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace zarchow
