#include "bhsub/fairness.hpp"

#include <cmath>
#include <cstddef>

#include "bhsub/subdivide.hpp"

namespace bhsub {

double CurvatureProfile::turning_angle() const {
    double s = 0.0;
    for (double d : exterior_angle) s += d;
    return s;
}

CurvatureProfile discrete_curvature(const Polygon& poly) {
    if (poly.dim != 2)
        throw invalid_input("discrete_curvature: signed exterior angles need a planar polygon");
    const std::size_t n = poly.size();
    if (n < 3) throw invalid_input("discrete_curvature: need at least 3 vertices");

    auto at = [&](std::size_t j) { return poly.vertex(j % n); };

    CurvatureProfile prof;
    const std::size_t lo = poly.closed ? 0 : 1;
    const std::size_t hi = poly.closed ? n : n - 1;
    for (std::size_t j = lo; j < hi; ++j) {
        const auto prev = at(j + n - 1);
        const auto cur = at(j);
        const auto next = at(j + 1);
        const double ax = cur[0] - prev[0], ay = cur[1] - prev[1];
        const double bx = next[0] - cur[0], by = next[1] - cur[1];
        const double la = std::hypot(ax, ay);
        const double lb = std::hypot(bx, by);
        if (la == 0.0 || lb == 0.0)
            throw invalid_input("discrete_curvature: duplicate adjacent vertex at index " +
                                std::to_string(j));
        const double delta = std::atan2(ax * by - ay * bx, ax * bx + ay * by);
        const double e = 0.5 * (la + lb);
        prof.exterior_angle.push_back(delta);
        prof.half_edge.push_back(e);
        prof.curvature.push_back(delta / e);
    }
    return prof;
}

double biharmonic_energy(const Polygon& poly) {
    const CurvatureProfile prof = discrete_curvature(poly);
    const std::size_t n = prof.curvature.size();
    double e = 0.0;
    if (poly.closed) {
        for (std::size_t j = 0; j < n; ++j) {
            const double d = prof.curvature[(j + 1) % n] - prof.curvature[j];
            e += d * d * prof.half_edge[j];
        }
    } else {
        for (std::size_t j = 0; j + 1 < n; ++j) {
            const double d = prof.curvature[j + 1] - prof.curvature[j];
            e += d * d * prof.half_edge[j];
        }
    }
    return e;
}

double curvature_variance(const Polygon& poly) {
    const CurvatureProfile prof = discrete_curvature(poly);
    double total = 0.0, mean = 0.0;
    for (std::size_t j = 0; j < prof.curvature.size(); ++j) {
        total += prof.half_edge[j];
        mean += prof.curvature[j] * prof.half_edge[j];
    }
    if (total <= 0.0) throw invalid_input("curvature_variance: degenerate zero-length polygon");
    mean /= total;
    double var = 0.0;
    for (std::size_t j = 0; j < prof.curvature.size(); ++j) {
        const double d = prof.curvature[j] - mean;
        var += d * d * prof.half_edge[j];
    }
    return var / total;
}

std::vector<FairnessReport> energy_decay_report(const Polygon& poly, const RationalMask& mask,
                                                int levels) {
    if (levels < 1) throw invalid_input("energy_decay_report: levels must be >= 1");
    std::vector<FairnessReport> out;
    Polygon cur = poly;
    for (int lvl = 0; lvl <= levels; ++lvl) {
        FairnessReport r;
        r.level = lvl;
        r.energy = biharmonic_energy(cur);
        r.variance = curvature_variance(cur);
        r.vertex_count = cur.size();
        out.push_back(r);
        if (lvl < levels) cur = subdivide_step(cur, mask);
    }
    return out;
}

} // namespace bhsub
