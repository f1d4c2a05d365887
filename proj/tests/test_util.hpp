#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zarchow/chamber.hpp"
#include "zarchow/surface.hpp"
#include "zarchow/toric.hpp"
#include "zarchow/zariski.hpp"

namespace testutil {

using namespace zarchow;

// Deterministic generator so property tests are reproducible everywhere.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    // inclusive bounds
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rational rational(long long lo, long long hi, long long max_den = 4) {
        const long long den = range(1, max_den);
        return Rational(range(lo * den, hi * den), den);
    }
};

// --- standard surfaces -------------------------------------------------------

// Hirzebruch F2 in the classical basis {E, f}: E the (-2)-section, f a fiber.
inline SurfaceLattice f2_lattice() {
    return SurfaceLattice(Mat::from_rows({{-2, 1}, {1, 0}}), {"E", "f"},
                          {Vec::from_ints({1, 0}), Vec::from_ints({0, 1})}, {"E", "f"});
}

// F1 = Bl_p P^2 in the basis {H, E}.
inline SurfaceLattice f1_lattice() {
    return SurfaceLattice(Mat::from_rows({{1, 0}, {0, -1}}), {"H", "E"},
                          {Vec::from_ints({0, 1}), Vec::from_ints({1, -1})}, {"E", "H-E"});
}

inline SurfaceLattice p1p1_lattice() {
    return SurfaceLattice(Mat::from_rows({{0, 1}, {1, 0}}), {"A", "B"},
                          {Vec::from_ints({1, 0}), Vec::from_ints({0, 1})}, {"A", "B"});
}

// --- standard fans ----------------------------------------------------------

// P^n: rays e_1..e_n and e_{n+1} = -(e_1 + ... + e_n), all n-subsets maximal.
inline Fan pn_fan(std::size_t n) {
    std::vector<Vec> rays;
    for (std::size_t i = 0; i < n; ++i)
        rays.push_back(Vec::unit(n, i));
    Vec last(n);
    for (std::size_t i = 0; i < n; ++i)
        last[i] = Rational(-1);
    rays.push_back(last);
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t omit = 0; omit <= n; ++omit) {
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i <= n; ++i)
            if (i != omit)
                c.push_back(i);
        cones.push_back(c);
    }
    return Fan(n, rays, cones);
}

// Hirzebruch surface: e1, e2 standard, e3 = -e1 + a e2, e4 = -e2.
inline Fan hirzebruch_fan(long long a) {
    std::vector<Vec> rays = {Vec::from_ints({1, 0}), Vec::from_ints({0, 1}),
                             Vec::from_ints({-1, a}), Vec::from_ints({0, -1})};
    return Fan(2, rays, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

inline Fan p1p1_fan() {
    std::vector<Vec> rays = {Vec::from_ints({1, 0}), Vec::from_ints({0, 1}),
                             Vec::from_ints({-1, 0}), Vec::from_ints({0, -1})};
    return Fan(2, rays, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

inline ToricDivisor toric_divisor(const Fan& f, std::vector<long long> coeffs) {
    ToricDivisor d;
    for (long long c : coeffs)
        d.coeffs.emplace_back(c);
    if (d.coeffs.size() != f.rays.size())
        throw std::invalid_argument("toric_divisor: coefficient count");
    return d;
}

// --- independent oracles ------------------------------------------------------

// Brute-force Zariski decomposition: try every support subset with negative
// definite Gram matrix, solve, and keep the pairs satisfying all axioms.
inline std::vector<std::pair<Divisor, Divisor>>
brute_force_zariski(const SurfaceLattice& s, const Divisor& d) {
    const std::size_t m = s.curves().size();
    std::vector<std::pair<Divisor, Divisor>> valid;
    for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
        std::vector<std::size_t> sub;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::size_t(1) << i))
                sub.push_back(i);
        if (sub.size() > s.rank())
            continue;
        if (!sub.empty() && !is_negative_definite(gram(s, sub)))
            continue;
        Divisor n(s.rank());
        if (!sub.empty()) {
            Vec rhs(sub.size());
            for (std::size_t k = 0; k < sub.size(); ++k)
                rhs[k] = pair(s, d, s.curve(sub[k]));
            const SolveResult res = solve_linear(gram(s, sub), rhs);
            if (res.status != SolveStatus::unique)
                continue;
            bool nonneg = true;
            for (std::size_t k = 0; k < sub.size(); ++k) {
                if (res.solution[k] < Rational(0)) {
                    nonneg = false;
                    break;
                }
                n += res.solution[k] * s.curve(sub[k]);
            }
            if (!nonneg)
                continue;
        }
        const Divisor p = d - n;
        if (!is_nef(s, p))
            continue;
        if (pair(s, p, n) != Rational(0))
            continue;
        bool fresh = true;
        for (const auto& [vp, vn] : valid)
            if (vp == p && vn == n)
                fresh = false;
        if (fresh)
            valid.emplace_back(p, n);
    }
    return valid;
}

// Membership in cone(gens) by checking coverage of a triangulation is what
// the library does; the independent route here solves the membership LP by
// brute force over supporting simplices of generator subsets.
inline bool in_cone_brute(const std::vector<Vec>& gens, const Vec& p) {
    if (p.is_zero())
        return true;
    const std::size_t m = gens.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
        std::vector<Vec> sub;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::size_t(1) << i))
                sub.push_back(gens[i]);
        if (rank_of(sub) != sub.size())
            continue;
        const Mat mcols = Mat::from_row_vecs(sub).transposed();
        const SolveResult res = solve_linear(mcols, p);
        if (res.status != SolveStatus::unique)
            continue;
        bool ok = true;
        for (std::size_t k = 0; k < sub.size(); ++k)
            if (res.solution[k] < Rational(0)) {
                ok = false;
                break;
            }
        if (ok)
            return true;
    }
    return false;
}

// h0 of n times the half-open unit triangle scaled: lattice points with
// x, y >= 0 and x + y <= floor(n / 2). The period-2 fixture.
inline Integer half_triangle_count(int n) {
    const int b = n / 2;
    Integer count = 0;
    for (int x = 0; x <= b; ++x)
        count += Integer(b - x + 1);
    return count;
}

inline Integer binom(long long n, long long k) {
    if (k < 0 || k > n)
        return Integer(0);
    Integer r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= Integer(n - i);
        r /= Integer(i + 1);
    }
    return r;
}

} // namespace testutil
