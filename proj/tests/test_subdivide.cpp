#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bhsub/subdivide.hpp"
#include "test_helpers.hpp"

using namespace bhsub;

namespace {

Polygon closed_ngon(int n, double radius = 1.0) {
    std::vector<double> coords;
    for (int i = 0; i < n; ++i) {
        const double th = 2.0 * M_PI * i / n;
        coords.push_back(radius * std::cos(th));
        coords.push_back(radius * std::sin(th));
    }
    return Polygon(std::move(coords), 2, true);
}

} // namespace

TEST_CASE("even rule copies vertices bit-identically, count doubles") {
    const Polygon poly = closed_ngon(9);
    const Polygon refined = subdivide_step(poly, builtin_mask(SchemeId::bh6));
    REQUIRE(refined.size() == 18);
    for (std::size_t j = 0; j < poly.size(); ++j) {
        CHECK(refined.vertex(2 * j)[0] == poly.vertex(j)[0]);
        CHECK(refined.vertex(2 * j)[1] == poly.vertex(j)[1]);
    }
}

TEST_CASE("interpolation retention across levels at stride 2^iters") {
    const Polygon square = Polygon::from_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, true);
    const Polygon fine = subdivide(square, builtin_mask(SchemeId::dgl4), 6);
    REQUIRE(fine.size() == 4u << 6);
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(fine.vertex(j * 64)[0] == square.vertex(j)[0]);
        CHECK(fine.vertex(j * 64)[1] == square.vertex(j)[1]);
    }
    // bh6 needs at least 6 vertices when closed
    CHECK_THROWS_AS(subdivide_step(square, builtin_mask(SchemeId::bh6)), invalid_input);
}

TEST_CASE("iteration counts: identity at 0, 9 * 2^7 vertices at 7") {
    const Polygon poly = closed_ngon(9);
    CHECK(subdivide(poly, builtin_mask(SchemeId::bh6), 0).size() == 9);
    CHECK(subdivide(poly, builtin_mask(SchemeId::bh6), 7).size() == 1152);
    CHECK_THROWS_AS(subdivide(poly, builtin_mask(SchemeId::bh6), -1), invalid_input);
}

TEST_CASE("collinear input stays on the line (affine invariance of the rule)") {
    std::vector<double> coords;
    for (int i = 0; i < 12; ++i) {
        coords.push_back(0.3 * i - 1.0);
        coords.push_back(0.7 * (0.3 * i - 1.0) + 0.2); // y = 0.7 x + 0.2
    }
    Polygon line(std::move(coords), 2, false);
    const Polygon refined = subdivide(line, builtin_mask(SchemeId::bh6), 2);
    for (std::size_t j = 0; j < refined.size(); ++j) {
        const double x = refined.vertex(j)[0];
        const double y = refined.vertex(j)[1];
        CHECK(std::abs(y - (0.7 * x + 0.2)) < 1e-14);
    }
}

TEST_CASE("open 2-vertex polyline: clamped insertion is the midpoint") {
    Polygon seg = Polygon::from_points({{0, 0}, {1, 2}}, false);
    const Polygon refined = subdivide_step(seg, builtin_mask(SchemeId::bh6));
    REQUIRE(refined.size() == 4);
    // clamped indices collapse the stencil to (128 p0 + 128 p1)/256 inside
    CHECK(refined.vertex(1)[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(refined.vertex(1)[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("quintic samples insert on the polynomial") {
    // p(t) = t^5 sampled at integers; interior insertions must hit p(t+1/2)
    std::vector<double> coords;
    const int n = 10;
    for (int i = 0; i < n; ++i) {
        const double t = i - (n - 1) / 2.0;
        coords.push_back(t);
        coords.push_back(std::pow(t, 5) / 64.0); // scaled to keep values O(10)
    }
    Polygon poly(std::move(coords), 2, false);
    const Polygon refined = subdivide_step(poly, builtin_mask(SchemeId::bh6));
    for (std::size_t j = 2; j + 3 < poly.size(); ++j) { // fully interior stencils
        const double t = refined.vertex(2 * j + 1)[0];
        CHECK(std::abs(refined.vertex(2 * j + 1)[1] - std::pow(t, 5) / 64.0) < 1e-12);
    }
}

TEST_CASE("affine equivariance over 7 levels to 1e-12") {
    const Polygon poly = bhsub::testing::benchmark_smooth_convex();
    // A = [[1.3, -0.4], [0.25, 0.9]], t = (0.7, -1.1)
    auto apply = [](const Polygon& p) {
        Polygon out = p;
        for (std::size_t j = 0; j < out.size(); ++j) {
            const double x = p.vertex(j)[0], y = p.vertex(j)[1];
            out.vertex(j)[0] = 1.3 * x - 0.4 * y + 0.7;
            out.vertex(j)[1] = 0.25 * x + 0.9 * y - 1.1;
        }
        return out;
    };
    const RationalMask mask = builtin_mask(SchemeId::bh6);
    const Polygon a = subdivide(apply(poly), mask, 7);
    const Polygon b = apply(subdivide(poly, mask, 7));
    double worst = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        worst = std::max(worst, std::abs(a.vertex(j)[0] - b.vertex(j)[0]));
        worst = std::max(worst, std::abs(a.vertex(j)[1] - b.vertex(j)[1]));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("reversal symmetry: reverse-subdivide equals subdivide-reverse") {
    const Polygon poly = bhsub::testing::benchmark_nonuniform();
    auto reversed = [](const Polygon& p) {
        Polygon out = p;
        const std::size_t n = p.size();
        for (std::size_t j = 0; j < n; ++j) {
            out.vertex(j)[0] = p.vertex(n - 1 - j)[0];
            out.vertex(j)[1] = p.vertex(n - 1 - j)[1];
        }
        return out;
    };
    const RationalMask mask = builtin_mask(SchemeId::bh8);
    const Polygon a = subdivide_step(reversed(poly), mask);
    const Polygon b = reversed(subdivide_step(poly, mask));
    // reversing a closed polygon of n vertices maps insertion slots with a
    // one-position shift; compare as vertex sets via nearest match
    REQUIRE(a.size() == b.size());
    const std::size_t n = a.size();
    double worst = 1e9;
    for (std::size_t shift = 0; shift < n; ++shift) {
        double w = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t k = (j + shift) % n;
            w = std::max(w, std::hypot(a.vertex(j)[0] - b.vertex(k)[0],
                                       a.vertex(j)[1] - b.vertex(k)[1]));
            if (w > 1e-8) break;
        }
        worst = std::min(worst, w);
    }
    CHECK(worst < 1e-13);
}

TEST_CASE("polynomial reproduction errors per scheme and degree") {
    const RationalMask bh6 = builtin_mask(SchemeId::bh6);
    for (int d = 0; d <= 5; ++d) CHECK(polynomial_reproduction_error(bh6, d) < 1e-12);
    CHECK(polynomial_reproduction_error(bh6, 6) > 0.1);
    CHECK(polynomial_reproduction_error(bh6, 6) == doctest::Approx(225.0 / 64.0).epsilon(1e-13));

    const RationalMask dgl = builtin_mask(SchemeId::dgl4);
    for (int d = 0; d <= 3; ++d) CHECK(polynomial_reproduction_error(dgl, d) < 1e-12);
    CHECK(polynomial_reproduction_error(dgl, 4) == doctest::Approx(9.0 / 16.0).epsilon(1e-13));

    const RationalMask bh8 = builtin_mask(SchemeId::bh8);
    for (int d = 0; d <= 7; ++d) CHECK(polynomial_reproduction_error(bh8, d) < 1e-9);
    CHECK(polynomial_reproduction_error(bh8, 8) > 0.1);
}

TEST_CASE("finite-difference norms: scaled ratios behave per scheme") {
    const FdNormTable bh6 = finite_difference_norms(builtin_mask(SchemeId::bh6), 10, 5);

    // k = 1: successive scaled ratio approaches 2^-3 within 15%
    for (int lvl = 5; lvl <= 9; ++lvl)
        CHECK(std::abs(bh6.scaled_ratio(lvl, 1) - 0.125) / 0.125 < 0.15);

    // k = 5: no decay, every scaled ratio >= 0.9
    for (int lvl = 4; lvl <= 9; ++lvl) CHECK(bh6.scaled_ratio(lvl, 5) >= 0.9);

    // dgl4 at k = 3: no decay (C^2 scheme), scaled ratio pinned near 1
    const FdNormTable dgl = finite_difference_norms(builtin_mask(SchemeId::dgl4), 10, 3);
    for (int lvl = 4; lvl <= 9; ++lvl)
        CHECK(std::abs(dgl.scaled_ratio(lvl, 3) - 1.0) < 0.1);

    CHECK_THROWS_AS(finite_difference_norms(builtin_mask(SchemeId::bh6), 2, 3), invalid_input);
}
