#include "bhsub/subdivide.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace bhsub {

Polygon subdivide_step(const Polygon& poly, const RationalMask& mask) {
    const std::size_t n = poly.size();
    const int m = mask.half_width();
    if (poly.closed) {
        if (n < static_cast<std::size_t>(2 * m))
            throw invalid_input("subdivide: closed polygon needs at least " +
                                std::to_string(2 * m) + " vertices for this mask");
    } else if (n < 2) {
        throw invalid_input("subdivide: open polygon needs at least 2 vertices");
    }

    const std::vector<double> w = mask.coefficients_as_double();
    const int dim = poly.dim;
    Polygon out;
    out.dim = dim;
    out.closed = poly.closed;
    out.coords.assign(2 * n * static_cast<std::size_t>(dim), 0.0);

    const auto sn = static_cast<long long>(n);
    for (std::size_t j = 0; j < n; ++j) {
        // even rule: exact copy
        auto dst = out.vertex(2 * j);
        auto src = poly.vertex(j);
        std::copy(src.begin(), src.end(), dst.begin());

        // odd rule
        auto ins = out.vertex(2 * j + 1);
        for (int k = mask.min_offset(); k <= mask.max_offset(); ++k) {
            long long idx = static_cast<long long>(j) + k;
            if (poly.closed) {
                idx %= sn;
                if (idx < 0) idx += sn;
            } else {
                idx = std::clamp(idx, 0LL, sn - 1);
            }
            const double a = w[static_cast<std::size_t>(k - mask.min_offset())];
            auto p = poly.vertex(static_cast<std::size_t>(idx));
            for (int c = 0; c < dim; ++c) ins[static_cast<std::size_t>(c)] += a * p[static_cast<std::size_t>(c)];
        }
    }
    return out;
}

Polygon subdivide(const Polygon& poly, const RationalMask& mask, int iters) {
    if (iters < 0) throw invalid_input("subdivide: iters must be >= 0");
    Polygon out = poly;
    for (int i = 0; i < iters; ++i) out = subdivide_step(out, mask);
    return out;
}

double polynomial_reproduction_error(const RationalMask& mask, int degree) {
    if (degree < 0) throw invalid_input("polynomial_reproduction_error: degree must be >= 0");
    const int m = mask.half_width();
    const int n_samples = 2 * (m + 2);
    const double center = (n_samples - 1) / 2.0;
    const std::vector<double> w = mask.coefficients_as_double();

    auto p = [&](double t) { return degree == 0 ? 1.0 : std::pow(t, degree); };

    double worst = 0.0;
    for (int j = m - 1; j < n_samples - m; ++j) {
        double ins = 0.0;
        for (int k = mask.min_offset(); k <= mask.max_offset(); ++k)
            ins += w[static_cast<std::size_t>(k - mask.min_offset())] * p(j + k - center);
        worst = std::max(worst, std::abs(ins - p(j + 0.5 - center)));
    }
    return worst;
}

double FdNormTable::scaled(int level, int k) const {
    return std::ldexp(value(level, k), (2 * k - 4) * level);
}

double FdNormTable::scaled_ratio(int level, int k) const {
    return scaled(level + 1, k) / scaled(level, k);
}

double FdNormTable::fitted_decay_exponent(int k, int lo, int hi) const {
    // least-squares slope of log2(scaled) against the level index
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (int lvl = lo; lvl <= hi; ++lvl) {
        const double y = std::log2(scaled(lvl, k));
        sx += lvl;
        sy += y;
        sxx += static_cast<double>(lvl) * lvl;
        sxy += lvl * y;
        ++n;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return -slope;
}

FdNormTable finite_difference_norms(const RationalMask& mask, int max_level, int max_k) {
    if (max_level < 3) throw invalid_input("finite_difference_norms: max_level must be >= 3");
    if (max_k < 1) throw invalid_input("finite_difference_norms: max_k must be >= 1");

    const int m = mask.half_width();
    const std::vector<double> w = mask.coefficients_as_double();

    // delta sequence with enough zero padding that the support never
    // reaches the ends after one step (re-padded each level)
    std::vector<double> line(static_cast<std::size_t>(4 * m + 3), 0.0);
    line[line.size() / 2] = 1.0;

    FdNormTable table;
    table.max_level = max_level;
    table.max_k = max_k;
    table.raw.resize(static_cast<std::size_t>(max_level));

    for (int lvl = 1; lvl <= max_level; ++lvl) {
        const std::size_t n = line.size();
        std::vector<double> next(2 * n, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            next[2 * j] = line[j];
            double acc = 0.0;
            for (int k = mask.min_offset(); k <= mask.max_offset(); ++k) {
                const long long idx = static_cast<long long>(j) + k;
                if (idx < 0 || idx >= static_cast<long long>(n)) continue; // zero extension
                acc += w[static_cast<std::size_t>(k - mask.min_offset())] *
                       line[static_cast<std::size_t>(idx)];
            }
            next[2 * j + 1] = acc;
        }
        // pad so the next level's mask reach stays inside the array
        next.insert(next.begin(), static_cast<std::size_t>(2 * m), 0.0);
        next.insert(next.end(), static_cast<std::size_t>(2 * m), 0.0);
        line = std::move(next);

        auto& row = table.raw[static_cast<std::size_t>(lvl - 1)];
        row.resize(static_cast<std::size_t>(max_k));
        std::vector<double> diff = line;
        for (int k = 1; k <= max_k; ++k) {
            for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
            diff.pop_back();
            double sup = 0.0;
            for (double v : diff) sup = std::max(sup, std::abs(v));
            row[static_cast<std::size_t>(k - 1)] = sup;
        }
    }
    return table;
}

} // namespace bhsub
