#pragma once

#include "bhsub/errors.hpp"

namespace bhsub {

/// Closed-form solution data of the reduced governing ODE
/// kappa'' = K kappa on one edge: curvature K, geodesic edge length,
/// endpoint curvatures, and the fitted constants.
///
/// Convention uniform in K (so the flat limit is continuous): the
/// solution is written
///   K = 0:  kappa(s) = c1 + c2 s
///   K > 0:  kappa(s) = c1 cosh(r s) + (c2 / r) sinh(r s),  r = sqrt(K)
///   K < 0:  kappa(s) = c1 cos(r s)  + (c2 / r) sin(r s),   r = sqrt(-K)
/// with c1 = kappa_j and c2 carrying curvature-per-length units; for
/// |K| = 1 the c2 so defined coincides with the printed unit-curvature
/// formula (kappa_{j+1} - kappa_j cosh e)/sinh e and its K = -1
/// counterpart, and c2 -> (kappa_{j+1} - kappa_j)/e as K -> 0.
struct SpaceFormContext {
    double K = 0.0;
    double edge_len = 0.0;
    double kappa0 = 0.0; ///< kappa_j
    double kappa1 = 0.0; ///< kappa_{j+1}
    double c1 = 0.0;
    double c2 = 0.0;
    double ell = 0.0; ///< half-edge e/2
};

/// Fits (c1, c2) from the endpoint curvatures. Throws invalid_input when
/// edge_len <= 0, numeric_error at a K < 0 resonance length
/// (|sin(sqrt(-K) e)| < 1e-12). Edges shorter than 1e-6 switch to a
/// Taylor-series evaluation to avoid cancellation.
SpaceFormContext boundary_constants(double kappa0, double kappa1, double edge_len, double K);

/// kappa(s) of the fitted solution, 0 <= s <= edge length.
double curvature_solution(const SpaceFormContext& ctx, double s);

/// Insertion angle: integral of the fitted curvature over the first half
/// of the edge,
///   K = 0:  c1 l + c2 l^2 / 2
///   K = +1: c1 sinh l + c2 (cosh l - 1)
///   K = -1: c1 sin l  - c2 (cos l - 1)
/// (unit-curvature forms; general K by arc-length rescaling).
double insertion_angle(double kappa0, double kappa1, double edge_len, double K);

/// |alpha^K - alpha^0| at identical endpoint data; exactly 0 for K = 0.
double proximity_deviation(double kappa0, double kappa1, double edge_len, double K);

} // namespace bhsub
