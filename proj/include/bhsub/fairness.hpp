#pragma once

#include <vector>

#include "bhsub/mask.hpp"
#include "bhsub/polygon.hpp"

namespace bhsub {

/// Per-vertex exterior-angle curvature data of a planar polygon.
/// Sign convention: positive exterior angle = left turn. The half-edge
/// length e_j is the mean of the two incident edge lengths. For open
/// polylines the two endpoint vertices are excluded (no exterior angle
/// is defined there), so the arrays then have size n-2.
struct CurvatureProfile {
    std::vector<double> exterior_angle; ///< delta_j, radians, signed
    std::vector<double> half_edge;      ///< e_j
    std::vector<double> curvature;      ///< kappa_j = delta_j / e_j

    double turning_angle() const; ///< sum of exterior angles
};

/// Exterior-angle estimator kappa_j = delta_j / e_j. Requires a planar
/// (d = 2) polygon with no duplicate adjacent vertices.
CurvatureProfile discrete_curvature(const Polygon& poly);

/// Discrete biharmonic energy sum_j (kappa_{j+1} - kappa_j)^2 e_j
/// (cyclic for closed polygons, consecutive interior pairs for open).
double biharmonic_energy(const Polygon& poly);

/// Arc-length-weighted curvature variance
/// sum_j (kappa_j - mean)^2 e_j / sum_j e_j with the e-weighted mean.
double curvature_variance(const Polygon& poly);

/// Metrics of one refinement level.
struct FairnessReport {
    int level = 0;
    double energy = 0.0;
    double variance = 0.0;
    std::size_t vertex_count = 0;
};

/// Reports for levels 0..levels; level 0 is the input polygon itself.
std::vector<FairnessReport> energy_decay_report(const Polygon& poly, const RationalMask& mask,
                                                int levels);

} // namespace bhsub
