#include <doctest.h>

#include <algorithm>

#include "test_util.hpp"
#include "zarchow/toric.hpp"
#include "zarchow/zariski.hpp"

using namespace zarchow;
using testutil::Rng;

namespace {

void check_axioms(const SurfaceLattice& s, const Divisor& d, const ZariskiPair& z) {
    CHECK(z.p + z.n == d);
    CHECK(is_nef(s, z.p));
    for (const auto& [i, c] : z.coefficients) {
        CHECK(c > Rational(0));
        CHECK(pair(s, z.p, s.curve(i)) == Rational(0));
    }
    if (!z.support.empty())
        CHECK(is_negative_definite(gram(s, z.support)));
    CHECK(pair(s, z.p, z.n) == Rational(0));
}

} // namespace

TEST_CASE("F1 example: H + 2E") {
    const SurfaceLattice s = testutil::f1_lattice();
    const ZariskiPair z = zariski_decompose(s, Vec::from_ints({1, 2}));
    CHECK(z.p == Vec::from_ints({1, 0}));
    CHECK(z.n == Vec::from_ints({0, 2}));
    CHECK(z.support == std::vector<std::size_t>{0});
    check_axioms(s, Vec::from_ints({1, 2}), z);
}

TEST_CASE("nef divisors decompose trivially") {
    const SurfaceLattice s = testutil::f2_lattice();
    const Divisor d = Vec::from_ints({1, 3});
    const ZariskiPair z = zariski_decompose(s, d);
    CHECK(z.p == d);
    CHECK(z.n.is_zero());
    CHECK(z.support.empty());
}

TEST_CASE("F2 example: 2E + f") {
    const SurfaceLattice s = testutil::f2_lattice();
    const ZariskiPair z = zariski_decompose(s, Vec::from_ints({2, 1}));
    CHECK(z.p == Vec{Rational(1, 2), Rational(1)});
    CHECK(z.n == Vec{Rational(3, 2), Rational(0)});
    CHECK(pair(s, z.p, s.curve(0)) == Rational(0));
    CHECK(pair(s, z.p, Vec::from_ints({0, 1})) == Rational(1, 2));
    check_axioms(s, Vec::from_ints({2, 1}), z);
}

TEST_CASE("non-pseudo-effective input fails loudly") {
    const SurfaceLattice s = testutil::f2_lattice();
    CHECK_THROWS_WITH_AS(zariski_decompose(s, Vec::from_ints({0, -1})),
                         doctest::Contains("not-pseudo-effective"), DomainError);
    CHECK_THROWS_AS(zariski_decompose(s, Vec::from_ints({-1, 0})), DomainError);
}

TEST_CASE("compatibility examples on F2") {
    const SurfaceLattice s = testutil::f2_lattice();
    const Divisor d1 = Vec::from_ints({2, 1});
    CHECK(compatible(s, d1, d1));
    CHECK_FALSE(compatible(s, Vec::from_ints({1, 3}), d1));
    CHECK(compatible(s, d1, Vec::from_ints({4, 2})));
}

TEST_CASE("uniqueness against brute force on the named lattices") {
    Rng rng(2024);
    for (const SurfaceLattice& s :
         {testutil::f1_lattice(), testutil::f2_lattice(), testutil::p1p1_lattice()}) {
        for (int trial = 0; trial < 25; ++trial) {
            // Effective combinations of curves plus a nef-ish part stay
            // pseudo-effective.
            Vec coeffs(s.curves().size());
            for (std::size_t i = 0; i < coeffs.size(); ++i)
                coeffs[i] = rng.rational(0, 3);
            const Divisor d = combination_of_curves(s, coeffs);
            if (d.is_zero())
                continue;
            const ZariskiPair z = zariski_decompose(s, d);
            check_axioms(s, d, z);
            const auto all = testutil::brute_force_zariski(s, d);
            REQUIRE(all.size() == 1);
            CHECK(all[0].first == z.p);
            CHECK(all[0].second == z.n);
        }
    }
}

TEST_CASE("linearity on shared support") {
    Rng rng(5);
    const SurfaceLattice s = testutil::f2_lattice();
    const Divisor d1 = Vec::from_ints({2, 1});
    const Divisor d2 = Vec::from_ints({4, 2});
    const ZariskiPair z1 = zariski_decompose(s, d1);
    const ZariskiPair z2 = zariski_decompose(s, d2);
    REQUIRE(z1.support == z2.support);
    for (int trial = 0; trial < 50; ++trial) {
        const Rational a = rng.rational(1, 5);
        const Rational b = rng.rational(1, 5);
        const ZariskiPair z = zariski_decompose(s, a * d1 + b * d2);
        CHECK(z.p == a * z1.p + b * z2.p);
        CHECK(z.n == a * z1.n + b * z2.n);
    }
}

TEST_CASE("asymptotic fixed parts on toric surfaces") {
    SUBCASE("base-point-free class on P2") {
        const ToricSurface ts = toric_surface(testutil::pn_fan(2));
        const auto seq = asymptotic_fixed_part(ts.fixed_part_oracle(),
                                               Vec::from_ints({1}), 8);
        REQUIRE(seq.size() == 8);
        for (const auto& [n, f] : seq)
            CHECK(f.is_zero());
    }
    SUBCASE("rigid negative section on F2") {
        const ToricSurface ts = toric_surface(testutil::hirzebruch_fan(2));
        const Divisor e = ts.ray_class(1); // the (-2)-section
        CHECK(pair(ts.lattice, e, e) == Rational(-2));
        const auto seq = asymptotic_fixed_part(ts.fixed_part_oracle(), e, 8);
        REQUIRE(seq.size() == 8);
        for (const auto& [n, f] : seq)
            CHECK(f == e);
    }
    SUBCASE("2E + f converges to the negative part") {
        const ToricSurface ts = toric_surface(testutil::hirzebruch_fan(2));
        const Divisor e = ts.ray_class(1);
        const Divisor f = ts.ray_class(0);
        const Divisor d = Rational(2) * e + f;
        const ZariskiPair z = zariski_decompose(ts.lattice, d);
        CHECK(z.n == Rational(3, 2) * e);
        const auto seq = asymptotic_fixed_part(ts.fixed_part_oracle(), d, 30);
        REQUIRE(seq.size() == 30);
        for (const auto& [n, fn] : seq) {
            const Vec diff = fn - z.n;
            for (std::size_t i = 0; i < diff.size(); ++i) {
                const Rational mag = diff[i] < Rational(0) ? -diff[i] : diff[i];
                CHECK(mag <= Rational(2, n));
            }
        }
    }
}

TEST_CASE("normalized fixed parts refine monotonically along doubling chains") {
    const ToricSurface ts = toric_surface(testutil::hirzebruch_fan(2));
    const Divisor d = Rational(2) * ts.ray_class(1) + ts.ray_class(0);
    const Fan& fan = ts.fan;
    auto fixed_ray_coeffs = [&](int n) {
        ToricDivisor nd = ts.cl.lift(Rational(n) * d);
        return fixed_part_toric(fan, nd).coeffs;
    };
    for (int start : {1, 3}) {
        auto prev = fixed_ray_coeffs(start);
        for (int n = 2 * start; n <= 8 * start; n *= 2) {
            const auto cur = fixed_ray_coeffs(n);
            for (std::size_t i = 0; i < cur.size(); ++i)
                CHECK(cur[i] / Rational(n) <= prev[i] / Rational(n / 2));
            prev = cur;
        }
    }
}

TEST_CASE("perturbation stability of decompositions (shrinking search)") {
    Rng rng(31);
    for (const SurfaceLattice& s : {testutil::f2_lattice(), testutil::f1_lattice()}) {
        // Big divisors to perturb around.
        std::vector<Divisor> ds;
        if (s.curves().size() == 2 && pair(s, s.curve(0), s.curve(0)) == Rational(-2))
            ds = {Vec::from_ints({2, 1}), Vec::from_ints({1, 1})};
        else
            ds = {Vec::from_ints({1, 2}), Vec::from_ints({2, 1})};
        for (const Divisor& d : ds) {
            const ZariskiPair z = zariski_decompose(s, d);
            long long den = 2;
            bool stable = false;
            while (den <= 64 && !stable) {
                stable = true;
                for (int trial = 0; trial < 40 && stable; ++trial) {
                    Vec dp = d;
                    for (std::size_t i = 0; i < dp.size(); ++i)
                        dp[i] += Rational(rng.range(-1, 1), den);
                    ZariskiPair zp;
                    try {
                        zp = zariski_decompose(s, dp);
                    } catch (const DomainError&) {
                        stable = false;
                        break;
                    }
                    if (pair(s, z.p, zp.n) != Rational(0) ||
                        pair(s, zp.p, z.n) != Rational(0) ||
                        !std::includes(zp.support.begin(), zp.support.end(),
                                       z.support.begin(), z.support.end()))
                        stable = false;
                }
                if (!stable)
                    den *= 2;
            }
            INFO("divisor ", d.str(), " box half-width 1/", den);
            CHECK(stable);
        }
    }
}
