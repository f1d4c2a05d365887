#include <doctest.h>

#include "test_util.hpp"
#include "zarchow/surface.hpp"

using namespace zarchow;
using testutil::Rng;

TEST_CASE("F2 pairing examples") {
    const SurfaceLattice s = testutil::f2_lattice();
    const Divisor e = Vec::from_ints({1, 0});
    const Divisor f = Vec::from_ints({0, 1});
    CHECK(pair(s, e, e) == Rational(-2));
    CHECK(pair(s, e + Rational(2) * f, e) == Rational(0));
    CHECK(pair(s, Rational(2) * e + f, f) == Rational(2));
    CHECK_THROWS_AS(pair(s, Vec::from_ints({1}), e), DomainError);
}

TEST_CASE("nefness relative to the catalogue") {
    const SurfaceLattice s = testutil::f2_lattice();
    CHECK(is_nef(s, Vec(2)));
    CHECK(is_nef(s, Vec::from_ints({1, 2})));
    CHECK_FALSE(is_nef(s, Vec::from_ints({1, 0})));
}

TEST_CASE("support of effective presentations") {
    const SurfaceLattice s = testutil::f2_lattice();
    CHECK(support(s, Vec{Rational(3, 2), Rational(0)}) == std::set<std::size_t>{0});
    CHECK(support(s, Vec::from_ints({2, 1})) == std::set<std::size_t>{0, 1});
    CHECK(support(s, Vec(2)).empty());
    CHECK_THROWS_AS(support(s, Vec::from_ints({-1, 0})), DomainError);
}

TEST_CASE("pairing is symmetric and bilinear") {
    Rng rng(11);
    const SurfaceLattice s = testutil::f2_lattice();
    for (int i = 0; i < 100; ++i) {
        Vec a(2), b(2), c(2);
        for (std::size_t k = 0; k < 2; ++k) {
            a[k] = rng.rational(-5, 5);
            b[k] = rng.rational(-5, 5);
            c[k] = rng.rational(-5, 5);
        }
        const Rational s1 = rng.rational(-3, 3);
        CHECK(pair(s, a, b) == pair(s, b, a));
        CHECK(pair(s, a + b, c) == pair(s, a, c) + pair(s, b, c));
        CHECK(pair(s, s1 * a, b) == s1 * pair(s, a, b));
    }
}

TEST_CASE("nef cone is closed under addition") {
    Rng rng(13);
    const SurfaceLattice s = testutil::f1_lattice();
    int found = 0;
    for (int i = 0; i < 200; ++i) {
        Vec a(2), b(2);
        for (std::size_t k = 0; k < 2; ++k) {
            a[k] = rng.rational(0, 4);
            b[k] = rng.rational(0, 4);
        }
        if (is_nef(s, a) && is_nef(s, b)) {
            ++found;
            CHECK(is_nef(s, a + b));
        }
    }
    CHECK(found > 10);
}

TEST_CASE("surface validation") {
    CHECK_THROWS_AS(SurfaceLattice(Mat::from_rows({{0, 1}, {2, 0}}), {"a", "b"}, {}, {}),
                    DomainError);
    CHECK_THROWS_AS(SurfaceLattice(Mat::from_rows({{1}}), {"a"},
                                   {Vec::from_ints({1}), Vec::from_ints({1})},
                                   {"c1", "c2"}),
                    DomainError);
    CHECK_THROWS_AS(SurfaceLattice(Mat::from_rows({{1}}), {"a"}, {Vec(1)}, {"zero"}),
                    DomainError);
}
