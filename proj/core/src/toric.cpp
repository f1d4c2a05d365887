#include "zarchow/toric.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "zarchow/cone.hpp"
#include "zarchow/errors.hpp"

namespace zarchow {

namespace {

bool positively_spanning(std::size_t dim, const std::vector<Vec>& rays) {
    const RationalCone c = RationalCone::from_generators(dim, rays);
    return c.dim() == dim && c.facets().empty();
}

} // namespace

Fan::Fan(std::size_t dim_, std::vector<Vec> rays_,
         std::vector<std::vector<std::size_t>> max_cones_,
         std::vector<std::string> ray_names_)
    : dim(dim_), rays(std::move(rays_)), max_cones(std::move(max_cones_)),
      ray_names(std::move(ray_names_)) {
    if (ray_names.empty())
        for (std::size_t i = 0; i < rays.size(); ++i)
            ray_names.push_back("e" + std::to_string(i + 1));
    if (ray_names.size() != rays.size())
        throw DomainError("bad-fan", "ray name count mismatch");
    for (std::size_t i = 0; i < rays.size(); ++i) {
        const Vec& v = rays[i];
        if (v.size() != dim)
            throw DomainError("bad-fan", "ray " + ray_names[i] + " has wrong dimension");
        if (v.is_zero() || !v.is_integral() || primitive(v) != v)
            throw DomainError("bad-fan", "ray " + ray_names[i] + " is not primitive");
        for (std::size_t j = 0; j < i; ++j)
            if (rays[j] == v)
                throw DomainError("bad-fan", "duplicate ray " + ray_names[i]);
    }
    if (max_cones.empty())
        throw DomainError("bad-fan", "fan needs at least one maximal cone");

    std::vector<RationalCone> cones;
    for (const auto& mc : max_cones) {
        std::vector<Vec> gens;
        for (std::size_t idx : mc) {
            if (idx >= rays.size())
                throw DomainError("bad-fan", "maximal cone ray index out of range");
            gens.push_back(rays[idx]);
        }
        RationalCone c = RationalCone::from_generators(dim, gens);
        if (c.dim() != dim)
            throw DomainError("bad-fan", "maximal cone is not full-dimensional");
        if (rank_of(c.facets()) != dim)
            throw DomainError("bad-fan", "maximal cone contains a line");
        cones.push_back(std::move(c));
    }
    // Fan condition: any two maximal cones meet in the cone spanned by their
    // common rays, which must be a face of both.
    for (std::size_t a = 0; a < cones.size(); ++a)
        for (std::size_t b = a + 1; b < cones.size(); ++b) {
            std::vector<Vec> common;
            for (std::size_t ia : max_cones[a])
                for (std::size_t ib : max_cones[b])
                    if (ia == ib)
                        common.push_back(rays[ia]);
            const RationalCone expect = RationalCone::from_generators(dim, common);
            const RationalCone inter = cones[a].intersect(cones[b]);
            if (!(expect.contains_cone(inter) && inter.contains_cone(expect)))
                throw DomainError("bad-fan", "maximal cones do not meet in a common face");
        }
    // Completeness by facet accounting: every wall of a maximal cone must be
    // shared with exactly one other maximal cone.
    bool closed = true;
    std::map<std::vector<std::size_t>, int> wall_count;
    for (std::size_t a = 0; a < cones.size(); ++a) {
        for (const Vec& h : cones[a].facets()) {
            std::vector<std::size_t> on_wall;
            for (std::size_t idx : max_cones[a])
                if (dot(h, rays[idx]).is_zero())
                    on_wall.push_back(idx);
            std::sort(on_wall.begin(), on_wall.end());
            on_wall.erase(std::unique(on_wall.begin(), on_wall.end()), on_wall.end());
            ++wall_count[on_wall];
        }
    }
    for (const auto& [wall, count] : wall_count)
        if (count != 2)
            closed = false;
    complete = closed && positively_spanning(dim, rays);
    if (complete) {
        // Membership sampling: unit directions must land in some cone.
        for (std::size_t j = 0; j < dim && complete; ++j) {
            for (int sign : {1, -1}) {
                Vec p(dim);
                p[j] = Rational(sign);
                bool covered = false;
                for (const auto& c : cones)
                    if (c.contains(p)) {
                        covered = true;
                        break;
                    }
                if (!covered) {
                    complete = false;
                    break;
                }
            }
        }
    }
}

bool ToricDivisor::is_integral() const {
    for (const auto& c : coeffs)
        if (!c.is_integer())
            return false;
    return true;
}

namespace {

void check_divisor(const Fan& f, const ToricDivisor& d) {
    if (d.coeffs.size() != f.rays.size())
        throw DomainError("dimension-mismatch", "divisor needs one coefficient per ray");
}

// All lattice points of { u : <u, v_ray> >= -coeff(ray) }. The polytope is
// bounded exactly when the rays positively span, i.e. the fan is complete.
std::vector<Vec> polytope_points(const Fan& f, const ToricDivisor& d) {
    check_divisor(f, d);
    if (!f.complete)
        throw DomainError("unbounded-polytope", "section polytope of a non-complete fan");
    const std::size_t n = f.dim;
    const std::size_t r = f.rays.size();

    auto satisfies = [&](const Vec& u) {
        for (std::size_t i = 0; i < r; ++i)
            if (dot(u, f.rays[i]) < -d.coeffs[i])
                return false;
        return true;
    };

    // Vertices sit on n independent active inequalities; scan all n-subsets.
    std::vector<Vec> vertices;
    if (n <= r) {
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i)
            idx[i] = i;
        for (;;) {
            Mat a(n, n);
            Vec b(n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j)
                    a(i, j) = f.rays[idx[i]][j];
                b[i] = -d.coeffs[idx[i]];
            }
            const SolveResult res = solve_linear(a, b);
            if (res.status == SolveStatus::unique && satisfies(res.solution))
                vertices.push_back(res.solution);
            bool advanced = false;
            for (std::size_t i = n; i-- > 0;) {
                if (idx[i] + 1 <= r - (n - i)) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < n; ++j)
                        idx[j] = idx[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced)
                break;
        }
    }
    if (vertices.empty())
        return {};

    std::vector<Integer> lo(n), hi(n);
    for (std::size_t j = 0; j < n; ++j) {
        lo[j] = vertices[0][j].floor();
        hi[j] = vertices[0][j].ceil();
        for (const Vec& v : vertices) {
            lo[j] = std::min(lo[j], v[j].floor());
            hi[j] = std::max(hi[j], v[j].ceil());
        }
    }
    std::vector<Vec> points;
    std::vector<Integer> cur = lo;
    for (;;) {
        Vec u(n);
        for (std::size_t j = 0; j < n; ++j)
            u[j] = Rational(cur[j]);
        if (satisfies(u))
            points.push_back(u);
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
    return points;
}

} // namespace

Integer h0_toric(const Fan& f, const ToricDivisor& d) {
    return Integer(polytope_points(f, d).size());
}

ToricDivisor fixed_part_toric(const Fan& f, const ToricDivisor& d) {
    const std::vector<Vec> points = polytope_points(f, d);
    if (points.empty())
        throw DomainError("empty-linear-series", "fixed part of an empty linear series");
    ToricDivisor fix;
    fix.coeffs.resize(f.rays.size());
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        Rational best = dot(points[0], f.rays[i]) + d.coeffs[i];
        for (const Vec& u : points)
            best = std::min(best, dot(u, f.rays[i]) + d.coeffs[i]);
        fix.coeffs[i] = best;
    }
    return fix;
}

// --- class group -------------------------------------------------------------

namespace {

struct Snf {
    std::vector<std::vector<Integer>> a; // diagonalized
    std::vector<std::vector<Integer>> u; // left unimodular, u * orig * v = a
    std::vector<std::vector<Integer>> v; // right unimodular
};

Snf smith_normal_form(std::vector<std::vector<Integer>> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    Snf s;
    s.a = std::move(a);
    s.u.assign(rows, std::vector<Integer>(rows, Integer(0)));
    s.v.assign(cols, std::vector<Integer>(cols, Integer(0)));
    for (std::size_t i = 0; i < rows; ++i)
        s.u[i][i] = 1;
    for (std::size_t j = 0; j < cols; ++j)
        s.v[j][j] = 1;

    auto row_sub = [&](std::size_t i, std::size_t t, const Integer& q) {
        for (std::size_t j = 0; j < cols; ++j)
            s.a[i][j] -= q * s.a[t][j];
        for (std::size_t j = 0; j < rows; ++j)
            s.u[i][j] -= q * s.u[t][j];
    };
    auto col_sub = [&](std::size_t j, std::size_t t, const Integer& q) {
        for (std::size_t i = 0; i < rows; ++i)
            s.a[i][j] -= q * s.a[i][t];
        for (std::size_t i = 0; i < cols; ++i)
            s.v[i][j] -= q * s.v[i][t];
    };
    auto row_swap = [&](std::size_t i, std::size_t t) {
        std::swap(s.a[i], s.a[t]);
        std::swap(s.u[i], s.u[t]);
    };
    auto col_swap = [&](std::size_t j, std::size_t t) {
        for (std::size_t i = 0; i < rows; ++i)
            std::swap(s.a[i][j], s.a[i][t]);
        for (std::size_t i = 0; i < cols; ++i)
            std::swap(s.v[i][j], s.v[i][t]);
    };

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block into the pivot.
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (!s.a[i][j].is_zero() &&
                        (pi == rows || abs(s.a[i][j]) < abs(s.a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows)
                break; // trailing block is zero
            if (pi != t)
                row_swap(pi, t);
            if (pj != t)
                col_swap(pj, t);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (!s.a[i][t].is_zero()) {
                    row_sub(i, t, s.a[i][t] / s.a[t][t]);
                    if (!s.a[i][t].is_zero())
                        clean = false;
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (!s.a[t][j].is_zero()) {
                    col_sub(j, t, s.a[t][j] / s.a[t][t]);
                    if (!s.a[t][j].is_zero())
                        clean = false;
                }
            if (!clean)
                continue;
            // Divisibility: the pivot must divide the trailing block.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols && divides; ++j)
                    if (!(s.a[i][j] % s.a[t][t]).is_zero()) {
                        // Fold that row in and restart the reduction.
                        for (std::size_t jj = 0; jj < cols; ++jj)
                            s.a[t][jj] += s.a[i][jj];
                        for (std::size_t jj = 0; jj < rows; ++jj)
                            s.u[t][jj] += s.u[i][jj];
                        divides = false;
                    }
            if (divides)
                break;
        }
        if (s.a[t][t] < 0) {
            for (std::size_t j = 0; j < cols; ++j)
                s.a[t][j] = -s.a[t][j];
            for (std::size_t j = 0; j < rows; ++j)
                s.u[t][j] = -s.u[t][j];
        }
    }
    return s;
}

} // namespace

Vec DivisorClassGroup::class_of(const ToricDivisor& d) const {
    if (d.coeffs.size() != class_map.cols())
        throw DomainError("dimension-mismatch", "divisor has wrong ray count");
    Vec a(d.coeffs.size());
    for (std::size_t i = 0; i < d.coeffs.size(); ++i)
        a[i] = d.coeffs[i];
    return class_map * a;
}

ToricDivisor DivisorClassGroup::lift(const Vec& klass) const {
    if (klass.size() != free_rank)
        throw DomainError("dimension-mismatch", "class vector has wrong rank");
    if (!klass.is_integral())
        throw DomainError("not-integral", "can only lift integral classes");
    const Vec a = section * klass;
    ToricDivisor d;
    d.coeffs.assign(a.size() == 0 ? std::size_t(0) : a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        d.coeffs[i] = a[i];
    return d;
}

DivisorClassGroup divisor_class_group(const Fan& f) {
    if (!f.complete)
        throw DomainError("fan-not-complete", "class group needs a complete fan");
    const std::size_t n = f.dim;
    const std::size_t r = f.rays.size();
    // Relations: the rows <m, v_ray> for the character basis m = e_1..e_n,
    // i.e. the quotient of Z^rays by the columns of the ray matrix.
    std::vector<std::vector<Integer>> rel(r, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rel[i][j] = f.rays[i][j].numerator();
    const Snf snf = smith_normal_form(rel);

    std::size_t diag_rank = 0;
    for (std::size_t t = 0; t < std::min(r, n); ++t)
        if (!snf.a[t][t].is_zero()) {
            if (snf.a[t][t] != 1)
                throw DomainError("torsion-class-group",
                                  "class group has torsion; only free class groups "
                                  "are supported");
            ++diag_rank;
        }
    if (diag_rank != n)
        throw DomainError("bad-fan", "rays do not span the lattice");
    const std::size_t k = r - n;

    DivisorClassGroup cl;
    cl.free_rank = k;
    cl.class_map = Mat(k, r);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < r; ++j)
            cl.class_map(i, j) = Rational(snf.u[n + i][j]);

    // Integer right-inverse from the SNF transform: the last k columns of
    // U^{-1} (integral since U is unimodular).
    Mat u(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            u(i, j) = Rational(snf.u[i][j]);
    cl.section = Mat(r, k);
    for (std::size_t i = 0; i < k; ++i) {
        Vec e(r);
        e[n + i] = Rational(1);
        const SolveResult res = solve_linear(u, e);
        if (res.status != SolveStatus::unique || !res.solution.is_integral())
            throw DomainError("toric-internal", "SNF transform is not unimodular");
        for (std::size_t j = 0; j < r; ++j)
            cl.section(j, i) = res.solution[j];
    }

    // Prefer the basis formed by the classes of the lexicographically first
    // unimodular ray subset: ray classes then have small nonnegative
    // coordinates on the standard examples.
    if (k > 0) {
        std::vector<std::size_t> subset;
        std::vector<Vec> chosen;
        for (std::size_t i = 0; i < r && subset.size() < k; ++i) {
            chosen.push_back(cl.class_map.col(i));
            if (rank_of(chosen) == chosen.size())
                subset.push_back(i);
            else
                chosen.pop_back();
        }
        if (subset.size() == k) {
            Mat b(k, k);
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t i = 0; i < k; ++i)
                    b(i, j) = cl.class_map(i, subset[j]);
            const Rational dtm = det(b);
            if (dtm == Rational(1) || dtm == Rational(-1)) {
                // class coords w.r.t. the chosen ray classes: b^{-1} * old.
                Mat binv(k, k);
                for (std::size_t j = 0; j < k; ++j) {
                    Vec e(k);
                    e[j] = Rational(1);
                    const SolveResult res = solve_linear(b, e);
                    for (std::size_t i = 0; i < k; ++i)
                        binv(i, j) = res.solution[i];
                }
                cl.class_map = binv * cl.class_map;
                cl.section = cl.section * b;
            }
        }
    }

    for (std::size_t i = 0; i < k; ++i) {
        const Vec check = cl.class_map * cl.section.col(i);
        for (std::size_t j = 0; j < k; ++j)
            if (check[j] != (i == j ? Rational(1) : Rational(0)))
                throw DomainError("toric-internal", "section is not a right inverse");
        if (!cl.section.col(i).is_integral())
            throw DomainError("toric-internal", "section is not integral");
    }
    return cl;
}

// --- Euler-Chow series ----------------------------------------------------------

RationalSeries euler_chow_divisors(const Fan& f) {
    const DivisorClassGroup cl = divisor_class_group(f);
    MultiPoly one = MultiPoly::constant(cl.free_rank, Integer(1));
    std::vector<DenomFactor> den;
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        const Vec c = cl.class_map.col(i);
        ExpVec v(cl.free_rank);
        for (std::size_t j = 0; j < cl.free_rank; ++j)
            v[j] = static_cast<int>(to_int64(c[j].numerator()));
        den.push_back(DenomFactor{v, 1});
    }
    return RationalSeries(std::move(one), std::move(den));
}

RationalSeries euler_chow_points(const Fan& f) {
    if (!f.complete)
        throw DomainError("fan-not-complete", "Euler-Chow series needs a complete fan");
    MultiPoly one = MultiPoly::constant(1, Integer(1));
    return RationalSeries(std::move(one),
                          {DenomFactor{{1}, static_cast<int>(f.max_cones.size())}});
}

RationalSeries euler_chow_top(const Fan& f) {
    if (!f.complete)
        throw DomainError("fan-not-complete", "Euler-Chow series needs a complete fan");
    return RationalSeries(MultiPoly::constant(1, Integer(1)), {DenomFactor{{1}, 1}});
}

std::size_t cone_count(const Fan& f, std::size_t dimension) {
    if (dimension == 0)
        return 1;
    if (dimension > f.dim)
        return 0;
    std::set<std::vector<std::size_t>> faces;
    for (const auto& mc : f.max_cones) {
        if (mc.size() != f.dim)
            throw DomainError("not-simplicial", "cone counting needs a simplicial fan");
        // all (dimension)-subsets of the cone's rays
        std::vector<std::size_t> idx(dimension);
        for (std::size_t i = 0; i < dimension; ++i)
            idx[i] = i;
        for (;;) {
            std::vector<std::size_t> face;
            for (std::size_t i : idx)
                face.push_back(mc[i]);
            std::sort(face.begin(), face.end());
            faces.insert(face);
            std::size_t i = dimension;
            bool done = true;
            while (i-- > 0) {
                if (idx[i] + 1 <= mc.size() - (dimension - i)) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < dimension; ++j)
                        idx[j] = idx[j - 1] + 1;
                    done = false;
                    break;
                }
            }
            if (done)
                break;
        }
    }
    return faces.size();
}

RationalSeries euler_chow_rank_one(const Fan& f, int p, bool rank_one_asserted) {
    if (!rank_one_asserted)
        throw DomainError("rank-one-flag-required",
                          "caller must assert that all cycle classes in this "
                          "codimension coincide");
    if (!f.complete)
        throw DomainError("fan-not-complete", "Euler-Chow series needs a complete fan");
    if (p < 0 || static_cast<std::size_t>(p) > f.dim)
        throw DomainError("bad-argument", "cycle dimension out of range");
    const std::size_t count = cone_count(f, f.dim - static_cast<std::size_t>(p));
    MultiPoly one = MultiPoly::constant(1, Integer(1));
    return RationalSeries(std::move(one), {DenomFactor{{1}, static_cast<int>(count)}});
}

// --- surfaces --------------------------------------------------------------------

namespace {

Mat ray_intersection_matrix(const Fan& f) {
    const std::size_t r = f.rays.size();
    Mat q(r, r);
    // Adjacency: two rays spanning a maximal cone meet transversally.
    for (const auto& mc : f.max_cones) {
        if (mc.size() != 2)
            throw DomainError("not-a-smooth-surface-fan", "maximal cones must be 2-dimensional");
        q(mc[0], mc[1]) = Rational(1);
        q(mc[1], mc[0]) = Rational(1);
    }
    // Self-intersections from the wall relation: the two neighbors of a ray
    // sum to a multiple of it, v_prev + v_next = -(D.D) v.
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<std::size_t> nb;
        for (const auto& mc : f.max_cones)
            for (std::size_t a = 0; a < 2; ++a)
                if (mc[a] == i)
                    nb.push_back(mc[1 - a]);
        if (nb.size() != 2)
            throw DomainError("not-a-smooth-surface-fan",
                              "every ray must lie on exactly two maximal cones");
        const Vec sum = f.rays[nb[0]] + f.rays[nb[1]];
        std::size_t piv = 0;
        while (piv < f.dim && f.rays[i][piv].is_zero())
            ++piv;
        const Rational c = sum[piv] / f.rays[i][piv];
        if (sum != c * f.rays[i] || !c.is_integer())
            throw DomainError("not-a-smooth-surface-fan", "wall relation failed at ray " +
                                                              f.ray_names[i]);
        q(i, i) = -c;
    }
    return q;
}

} // namespace

ToricSurface toric_surface(const Fan& f) {
    if (f.dim != 2)
        throw DomainError("not-a-smooth-surface-fan", "fan dimension must be 2");
    if (!f.complete)
        throw DomainError("not-a-smooth-surface-fan", "fan must be complete");
    for (const auto& mc : f.max_cones) {
        if (mc.size() != 2)
            throw DomainError("not-a-smooth-surface-fan", "maximal cones must be simplicial");
        Mat m(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                m(i, j) = f.rays[mc[i]][j];
        const Rational d = det(m);
        if (d != Rational(1) && d != Rational(-1))
            throw DomainError("not-a-smooth-surface-fan",
                              "non-unimodular maximal cone (singular surface)");
    }

    DivisorClassGroup cl = divisor_class_group(f);
    const Mat q = ray_intersection_matrix(f);
    const std::size_t k = cl.free_rank;

    // Intersection form on the class basis: lift each basis class to a
    // rational ray-coefficient vector; the pairing descends to classes.
    std::vector<Vec> lifts;
    for (std::size_t i = 0; i < k; ++i) {
        Vec e(k);
        e[i] = Rational(1);
        const auto sol = solve_any(cl.class_map, e);
        if (!sol)
            throw DomainError("toric-internal", "class map not surjective");
        lifts.push_back(*sol);
    }
    Mat form(k, k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            const Rational val = dot(lifts[a], q * lifts[b]);
            if (!val.is_integer())
                throw DomainError("toric-internal", "non-integral intersection number");
            form(a, b) = val;
        }

    std::vector<Vec> curves;
    std::vector<std::string> curve_labels;
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        const Vec c = cl.class_map.col(i);
        if (std::find(curves.begin(), curves.end(), c) == curves.end()) {
            curves.push_back(c);
            curve_labels.push_back(f.ray_names[i]);
        }
    }
    std::vector<std::string> basis_labels;
    for (std::size_t i = 0; i < k; ++i)
        basis_labels.push_back("b" + std::to_string(i + 1));

    ToricSurface ts{f, cl,
                    SurfaceLattice(form, std::move(basis_labels), std::move(curves),
                                   std::move(curve_labels))};
    return ts;
}

Divisor ToricSurface::ray_class(std::size_t ray) const { return cl.class_map.col(ray); }

DivisorH0 ToricSurface::h0_oracle() const {
    // Capture by value so the oracle outlives the surface object.
    const Fan f = fan;
    const DivisorClassGroup c = cl;
    return [f, c](const Divisor& klass) { return h0_toric(f, c.lift(klass)); };
}

FixedPartOracle ToricSurface::fixed_part_oracle() const {
    const Fan f = fan;
    const DivisorClassGroup c = cl;
    return [f, c](const Divisor& klass) {
        const ToricDivisor fix = fixed_part_toric(f, c.lift(klass));
        return c.class_of(fix);
    };
}

SurfaceLattice surface_lattice_from_fan(const Fan& f) { return toric_surface(f).lattice; }

} // namespace zarchow
