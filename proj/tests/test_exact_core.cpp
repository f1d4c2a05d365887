#include <doctest.h>

#include "test_util.hpp"
#include "zarchow/linalg.hpp"

using namespace zarchow;
using testutil::Rng;

TEST_CASE("rational invariants and parsing") {
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).denominator() == 2);
    CHECK(Rational(3, -6).numerator() == -1);
    CHECK(Rational::parse("5/15") == Rational(1, 3));
    CHECK(Rational::parse("-7").str() == "-7");
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Rational::parse("x"), DomainError);
}

TEST_CASE("rational arithmetic is exact on random triples") {
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        const Rational a = rng.rational(-20, 20, 7);
        const Rational b = rng.rational(-20, 20, 7);
        const Rational c = rng.rational(-20, 20, 7);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (!c.is_zero())
            CHECK((a / c) * c == a);
    }
}

TEST_CASE("solve_linear on the stated examples") {
    SUBCASE("single equation -2x = -3") {
        const auto res = solve_linear(Mat::from_rows({{-2}}), Vec::from_ints({-3}));
        REQUIRE(res.status == SolveStatus::unique);
        CHECK(res.solution[0] == Rational(3, 2));
    }
    SUBCASE("identity") {
        const auto res = solve_linear(Mat::identity(2), Vec::from_ints({5, 7}));
        REQUIRE(res.status == SolveStatus::unique);
        CHECK(res.solution == Vec::from_ints({5, 7}));
    }
    SUBCASE("2x2 system") {
        const auto res =
            solve_linear(Mat::from_rows({{-2, 1}, {1, -2}}), Vec::from_ints({-1, -1}));
        REQUIRE(res.status == SolveStatus::unique);
        CHECK(res.solution == Vec::from_ints({1, 1}));
    }
    SUBCASE("inconsistent") {
        const auto res =
            solve_linear(Mat::from_rows({{1, 1}, {1, 1}}), Vec::from_ints({0, 1}));
        CHECK(res.status == SolveStatus::inconsistent);
    }
    SUBCASE("underdetermined") {
        const auto res =
            solve_linear(Mat::from_rows({{1, 1}, {2, 2}}), Vec::from_ints({1, 2}));
        CHECK(res.status == SolveStatus::underdetermined);
    }
}

TEST_CASE("solutions re-substitute exactly") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.range(1, 4));
        Mat a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) = rng.rational(-5, 5, 3);
        Vec b(n);
        for (std::size_t i = 0; i < n; ++i)
            b[i] = rng.rational(-5, 5, 3);
        const auto res = solve_linear(a, b);
        if (res.status == SolveStatus::unique)
            CHECK(a * res.solution == b);
    }
}

TEST_CASE("negative definiteness by leading minors") {
    CHECK(is_negative_definite(Mat::from_rows({{-2}})));
    CHECK(is_negative_definite(Mat::from_rows({{-2, 1}, {1, -2}})));
    CHECK_FALSE(is_negative_definite(Mat::from_rows({{-2, 1}, {1, 0}})));
    CHECK_FALSE(is_negative_definite(Mat::from_rows({{2}})));
    CHECK_THROWS_AS(is_negative_definite(Mat::from_rows({{1, 2}, {3, 4}})),
                    std::invalid_argument);
}

TEST_CASE("negative definiteness agrees with a brute-force grid") {
    Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.range(1, 3));
        Mat a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                a(i, j) = Rational(rng.range(-4, 4));
                a(j, i) = a(i, j);
            }
        const bool nd = is_negative_definite(a);
        // When the test says yes, every nonzero grid vector must pair negative.
        bool counterexample = false;
        std::vector<long long> v(n, -3);
        for (;;) {
            Vec x(n);
            bool zero = true;
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = Rational(v[i]);
                zero = zero && v[i] == 0;
            }
            if (!zero && nd && !(dot(x, a * x) < Rational(0)))
                counterexample = true;
            std::size_t i = 0;
            while (i < n) {
                if (v[i] < 3) {
                    ++v[i];
                    break;
                }
                v[i] = -3;
                ++i;
            }
            if (i == n)
                break;
        }
        CHECK_FALSE(counterexample);
    }
}

TEST_CASE("nullspace and rank") {
    const Mat a = Mat::from_rows({{1, 2, 3}, {2, 4, 6}});
    CHECK(rank(a) == 1);
    const auto ns = nullspace(a);
    CHECK(ns.size() == 2);
    for (const Vec& v : ns)
        CHECK((a * v).is_zero());
}

TEST_CASE("primitive scaling") {
    CHECK(primitive(Vec{Rational(2, 3), Rational(-4, 3)}) == Vec::from_ints({1, -2}));
    CHECK(primitive(Vec::from_ints({6, -9})) == Vec::from_ints({2, -3}));
    CHECK(primitive(Vec(2)).is_zero());
}
