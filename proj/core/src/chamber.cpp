#include "zarchow/chamber.hpp"

#include <algorithm>
#include <set>

#include "zarchow/errors.hpp"

namespace zarchow {

std::pair<Divisor, Divisor> sigma_projection(const SurfaceLattice& s,
                                             const std::vector<std::size_t>& gamma,
                                             const Divisor& d) {
    if (gamma.empty())
        return {Divisor(s.rank()), d};
    const Mat g = gram(s, gamma);
    if (!is_negative_definite(g))
        throw DomainError("gamma-not-negative-definite",
                          "sigma projection needs a negative definite curve set");
    Vec rhs(gamma.size());
    for (std::size_t k = 0; k < gamma.size(); ++k)
        rhs[k] = pair(s, d, s.curve(gamma[k]));
    const SolveResult res = solve_linear(g, rhs);
    if (res.status != SolveStatus::unique)
        throw DomainError("gamma-not-negative-definite", "projection system is singular");
    Divisor f1(s.rank());
    for (std::size_t k = 0; k < gamma.size(); ++k)
        f1 += res.solution[k] * s.curve(gamma[k]);
    return {f1, d - f1};
}

namespace {

// Linear functional m -> x_i(m) with F1(D) = sum x_i(D) C_i solved against
// the gamma Gram matrix; returned as one normal vector per gamma curve.
std::vector<Vec> f1_coefficient_functionals(const SurfaceLattice& s,
                                            const std::vector<std::size_t>& gamma) {
    const Mat g = gram(s, gamma);
    std::vector<Vec> out;
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        // Solve g * c = e_i; then x_i(D) = sum_j c_j (D . C_j).
        Vec e(gamma.size());
        e[i] = Rational(1);
        const SolveResult res = solve_linear(g, e);
        if (res.status != SolveStatus::unique)
            throw DomainError("gamma-not-negative-definite", "singular gamma Gram matrix");
        Vec functional(s.rank());
        for (std::size_t j = 0; j < gamma.size(); ++j)
            functional += res.solution[j] * (s.form() * s.curve(gamma[j]));
        out.push_back(functional);
    }
    return out;
}

void enumerate_negative_definite_subsets(const SurfaceLattice& s,
                                         const std::vector<std::size_t>& pool,
                                         std::vector<std::size_t>& current,
                                         std::size_t start,
                                         std::vector<std::vector<std::size_t>>& out) {
    out.push_back(current);
    if (current.size() == s.rank())
        return; // negative definite sets are linearly independent
    for (std::size_t k = start; k < pool.size(); ++k) {
        current.push_back(pool[k]);
        if (is_negative_definite(gram(s, current)))
            enumerate_negative_definite_subsets(s, pool, current, k + 1, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Chamber> zariski_chambers(const SurfaceLattice& s, const RationalCone& w) {
    if (w.ambient_dim() != s.rank())
        throw DomainError("dimension-mismatch", "cone must live in the divisor lattice");

    // Candidate negative curves: the null locus of the nef part of each
    // generator (the union of the augmented base loci of the generators).
    std::set<std::size_t> g_set;
    for (const Vec& gen : w.generators()) {
        const ZariskiPair z = zariski_decompose(s, gen);
        if (pair(s, z.p, z.p) <= Rational(0))
            throw DomainError("generator-not-big",
                              "chamber decomposition needs big generators");
        for (std::size_t i = 0; i < s.curves().size(); ++i)
            if (pair(s, z.p, s.curve(i)).is_zero())
                g_set.insert(i);
    }
    const std::vector<std::size_t> pool(g_set.begin(), g_set.end());

    std::vector<std::vector<std::size_t>> candidates;
    std::vector<std::size_t> current;
    enumerate_negative_definite_subsets(s, pool, current, 0, candidates);

    std::vector<Chamber> chambers;
    for (const auto& gamma : candidates) {
        // W_bar_gamma = W cut by: the gamma-coefficients of the projection
        // are >= 0 and the orthogonal part meets every candidate curve >= 0.
        std::vector<Vec> halfspaces;
        const std::vector<Vec> xs =
            gamma.empty() ? std::vector<Vec>{} : f1_coefficient_functionals(s, gamma);
        for (const Vec& functional : xs)
            halfspaces.push_back(primitive(functional));
        for (std::size_t ci : pool) {
            // F2(D) . C = D . C - sum_i x_i(D) (C_i . C)
            Vec functional = s.form() * s.curve(ci);
            for (std::size_t i = 0; i < gamma.size(); ++i) {
                const Rational cc = pair(s, s.curve(gamma[i]), s.curve(ci));
                functional -= cc * xs[i];
            }
            if (!functional.is_zero())
                halfspaces.push_back(primitive(functional));
        }
        const RationalCone cut = RationalCone::from_inequalities(s.rank(), halfspaces);
        const RationalCone chamber_cone = w.intersect(cut);
        if (chamber_cone.is_zero_cone())
            continue;
        // Certify: an interior point must decompose with support exactly gamma.
        const Vec probe = chamber_cone.relative_interior_point();
        const ZariskiPair z = zariski_decompose(s, probe);
        if (z.support == gamma)
            chambers.push_back(Chamber{gamma, chamber_cone});
    }
    std::sort(chambers.begin(), chambers.end(),
              [](const Chamber& a, const Chamber& b) { return a.gamma < b.gamma; });
    return chambers;
}

} // namespace zarchow
