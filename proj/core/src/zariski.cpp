#include "zarchow/zariski.hpp"

#include <algorithm>

#include "zarchow/errors.hpp"

namespace zarchow {

namespace {

void verify_axioms(const SurfaceLattice& s, const Divisor& d, const ZariskiPair& zp) {
    if (zp.p + zp.n != d)
        throw DomainError("zariski-internal", "P + N != D");
    if (!is_nef(s, zp.p))
        throw DomainError("zariski-internal", "P is not nef");
    for (const auto& [i, c] : zp.coefficients) {
        if (c <= Rational(0))
            throw DomainError("zariski-internal", "support coefficient not positive");
        if (pair(s, zp.p, s.curve(i)) != Rational(0))
            throw DomainError("zariski-internal", "P . C != 0 on the support");
    }
    if (!zp.support.empty() && !is_negative_definite(gram(s, zp.support)))
        throw DomainError("zariski-internal", "support Gram matrix not negative definite");
    if (pair(s, zp.p, zp.n) != Rational(0))
        throw DomainError("zariski-internal", "P . N != 0");
}

} // namespace

ZariskiPair zariski_decompose(const SurfaceLattice& s, const Divisor& d) {
    if (d.size() != s.rank())
        throw DomainError("dimension-mismatch", "divisor dimension must equal lattice rank");

    std::vector<std::size_t> sigma;
    for (std::size_t i = 0; i < s.curves().size(); ++i)
        if (pair(s, d, s.curve(i)) < Rational(0))
            sigma.push_back(i);

    Vec coeffs; // parallel to sigma
    Divisor n(s.rank());
    for (;;) {
        if (!sigma.empty()) {
            const Mat g = gram(s, sigma);
            if (!is_negative_definite(g))
                throw DomainError("not-pseudo-effective",
                                  "support Gram matrix is not negative definite");
            Vec rhs(sigma.size());
            for (std::size_t k = 0; k < sigma.size(); ++k)
                rhs[k] = pair(s, d, s.curve(sigma[k]));
            const SolveResult res = solve_linear(g, rhs);
            if (res.status != SolveStatus::unique)
                throw DomainError("inconsistent-catalogue",
                                  "support system does not solve uniquely");
            coeffs = res.solution;
            for (std::size_t k = 0; k < coeffs.size(); ++k)
                if (coeffs[k] < Rational(0))
                    throw DomainError("not-pseudo-effective",
                                      "negative coefficient in the support solve");
            n = Divisor(s.rank());
            for (std::size_t k = 0; k < sigma.size(); ++k)
                n += coeffs[k] * s.curve(sigma[k]);
        }
        const Divisor p = d - n;
        // Adjoin every curve the remainder still meets negatively (all at
        // once, so the result does not depend on catalogue order).
        std::vector<std::size_t> grown = sigma;
        for (std::size_t i = 0; i < s.curves().size(); ++i) {
            if (std::find(sigma.begin(), sigma.end(), i) != sigma.end())
                continue;
            if (pair(s, p, s.curve(i)) < Rational(0))
                grown.push_back(i);
        }
        if (grown.size() == sigma.size())
            break;
        std::sort(grown.begin(), grown.end());
        sigma = std::move(grown);
    }

    ZariskiPair zp;
    zp.n = n;
    zp.p = d - n;
    for (std::size_t k = 0; k < sigma.size(); ++k)
        if (k < coeffs.size() && coeffs[k] > Rational(0)) {
            zp.support.push_back(sigma[k]);
            zp.coefficients[sigma[k]] = coeffs[k];
        }
    std::sort(zp.support.begin(), zp.support.end());
    verify_axioms(s, d, zp);
    return zp;
}

bool compatible(const SurfaceLattice& s, const Divisor& d1, const Divisor& d2) {
    const ZariskiPair z1 = zariski_decompose(s, d1);
    const ZariskiPair z2 = zariski_decompose(s, d2);
    return pair(s, z1.p + z2.p, z1.n + z2.n) == Rational(0);
}

bool is_big(const SurfaceLattice& s, const Divisor& d) {
    const ZariskiPair z = zariski_decompose(s, d);
    return pair(s, z.p, z.p) > Rational(0);
}

std::vector<std::pair<int, Divisor>>
asymptotic_fixed_part(const FixedPartOracle& oracle, const Divisor& d, int n_max) {
    std::vector<std::pair<int, Divisor>> out;
    for (int n = 1; n <= n_max; ++n) {
        Divisor nd = Rational(n) * d;
        if (!nd.is_integral())
            continue;
        Divisor f = oracle(nd);
        out.emplace_back(n, Rational(1, n) * f);
    }
    return out;
}

} // namespace zarchow
