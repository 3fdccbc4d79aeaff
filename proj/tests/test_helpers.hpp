#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "bhsub/polygon.hpp"
#include "bhsub/rational.hpp"

namespace bhsub::testing {

// Deterministic uniform draw on [0,1); explicit mantissa mapping keeps it
// identical across standard libraries.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Rational random_small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-30, 30);
    std::uniform_int_distribution<long long> den(1, 12);
    return Rational(num(rng), den(rng));
}

// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// The three repo-defined benchmark polygons of the fairness experiments.
inline Polygon benchmark_smooth_convex() {
    std::vector<double> coords;
    for (int i = 0; i < 9; ++i) {
        const double th = 2.0 * M_PI * i / 9.0;
        const double r = 1.0 + 0.18 * std::cos(2 * th) + 0.08 * std::sin(3 * th);
        coords.push_back(r * std::cos(th));
        coords.push_back(r * std::sin(th));
    }
    return Polygon(std::move(coords), 2, true);
}

inline Polygon benchmark_concave() {
    std::vector<double> coords;
    for (int i = 0; i < 10; ++i) {
        const double th = 2.0 * M_PI * i / 10.0;
        const double r = 1.0 + 0.15 * std::cos(th);
        coords.push_back(r * std::cos(th));
        coords.push_back(r * std::sin(th));
    }
    coords[0] = 0.35; // pull vertex 0 inward: one genuinely concave corner
    coords[1] = 0.0;
    return Polygon(std::move(coords), 2, true);
}

inline Polygon benchmark_nonuniform() {
    std::vector<double> coords;
    for (int i = 0; i < 12; ++i) {
        const double t = 2.0 * M_PI * i / 12.0;
        const double u = t + 0.655 * std::sin(t); // max/min edge ratio ~4.5
        coords.push_back(1.15 * std::cos(u));
        coords.push_back(0.95 * std::sin(u));
    }
    return Polygon(std::move(coords), 2, true);
}

} // namespace bhsub::testing
