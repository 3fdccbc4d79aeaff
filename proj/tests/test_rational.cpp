#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bhsub/linsolve.hpp"
#include "bhsub/rational.hpp"
#include "test_helpers.hpp"

using namespace bhsub;
using bhsub::testing::random_small_rational;

TEST_CASE("normalization: canonical form and sign") {
    CHECK(rat_normalize(6, -4) == Rational(-3, 2));
    CHECK(rat_normalize(0, 7) == Rational(0));
    CHECK(rat_normalize(0, 7).den() == 1);
    CHECK(rat_normalize(150, 256) == Rational(75, 128));
    CHECK(rat_normalize(150, 256).str() == "75/128");
    CHECK_THROWS_AS(Rational(1, 0), invalid_input);
}

TEST_CASE("arithmetic examples") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(3, 256) * Rational(-25, 256) == Rational(-75, 65536));
    CHECK(Rational(1, 4) / Rational(1, 2) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), numeric_error);
}

TEST_CASE("parse and serialize") {
    CHECK(Rational::parse("-25/256").str() == "-25/256");
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational().str() == "0/1");
    CHECK_THROWS_AS(Rational::parse("abc"), invalid_input);
}

TEST_CASE("field laws on random small values via cross-multiplication") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        const Rational a = random_small_rational(rng);
        const Rational b = random_small_rational(rng);
        const Rational c = random_small_rational(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        // cross-multiplication identity for the sum
        const Rational s = a + b;
        CHECK(s.num() * a.den() * b.den() == a.num() * b.den() * s.den() + b.num() * a.den() * s.den());
    }
}

TEST_CASE("linsolve: identity system") {
    RationalMatrix eye = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    RationalVector b = {Rational(1, 2), Rational(1, 4)};
    CHECK(rat_linsolve(eye, b) == b);
}

TEST_CASE("linsolve: the 3x3 sum-rule system") {
    // rows n = 0, 2, 4 for unknowns (alpha, beta, gamma):
    //   2a + 2b + 2c = 1 ; a + 5b + 13c = 1/4 ; a + 17b + 97c = 1/16
    RationalMatrix A = {
        {Rational(2), Rational(2), Rational(2)},
        {Rational(1), Rational(5), Rational(13)},
        {Rational(1), Rational(17), Rational(97)},
    };
    RationalVector b = {Rational(1), Rational(1, 4), Rational(1, 16)};
    const RationalVector x = rat_linsolve(A, b);
    CHECK(x[0] == Rational(150, 256));
    CHECK(x[1] == Rational(-25, 256));
    CHECK(x[2] == Rational(3, 256));
}

TEST_CASE("linsolve: the 4x4 sum-rule system gives the degree-7 mask") {
    RationalMatrix A(4, RationalVector(4));
    RationalVector b(4);
    for (int row = 0; row < 4; ++row) {
        const unsigned n = static_cast<unsigned>(2 * row);
        for (int i = 1; i <= 4; ++i)
            A[row][i - 1] = Rational(i).pow(n) + Rational(1 - i).pow(n);
        b[row] = Rational(1, 2).pow(n);
    }
    const RationalVector x = rat_linsolve(A, b);
    CHECK(x[0] == Rational(1225, 2048));
    CHECK(x[1] == Rational(-245, 2048));
    CHECK(x[2] == Rational(49, 2048));
    CHECK(x[3] == Rational(-5, 2048));
}

TEST_CASE("linsolve: roundtrip A x = b on random nonsingular systems up to 8x8") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng() % 8);
        RationalMatrix A(n, RationalVector(n));
        RationalVector x(n);
        for (auto& xi : x) xi = random_small_rational(rng);
        for (auto& row : A)
            for (auto& aij : row) aij = random_small_rational(rng);
        RationalVector b(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) b[i] += A[i][j] * x[j];
        try {
            CHECK(rat_linsolve(A, b) == x);
        } catch (const singular_matrix&) {
            // a random draw can be singular; uniqueness is not defined then
        }
    }
}

TEST_CASE("linsolve: error taxonomy") {
    RationalMatrix singular = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    RationalVector b2 = {Rational(1), Rational(1)};
    CHECK_THROWS_AS(rat_linsolve(singular, b2), singular_matrix);

    RationalMatrix rect = {{Rational(1), Rational(2)}};
    CHECK_THROWS_AS(rat_linsolve(rect, b2), invalid_input);
    RationalMatrix eye = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    RationalVector b3 = {Rational(1), Rational(1), Rational(1)};
    CHECK_THROWS_AS(rat_linsolve(eye, b3), invalid_input);
}
