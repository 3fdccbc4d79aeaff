#include "bhsub/spaceform.hpp"

#include <cmath>

namespace bhsub {

namespace {

constexpr double kTaylorEdge = 1e-6;    // below this, series evaluation
constexpr double kResonanceTol = 1e-12; // |sin(r e)| guard for K < 0

// c2 series, valid for any K (exact at K = 0):
//   c2 = (k1-k0)/e - (k0/3 + k1/6) K e + (k0/45 + 7 k1/360) K^2 e^3
double c2_series(double k0, double k1, double e, double K) {
    return (k1 - k0) / e - (k0 / 3.0 + k1 / 6.0) * K * e +
           (k0 / 45.0 + 7.0 * k1 / 360.0) * K * K * e * e * e;
}

// alpha series:
//   alpha = (3 k0/8 + k1/8) e - (3 k0/128 + 7 k1/384) K e^3
//         + (11 k0/5120 + 31 k1/15360) K^2 e^5
double alpha_series(double k0, double k1, double e, double K) {
    const double e2 = e * e;
    return (3.0 * k0 / 8.0 + k1 / 8.0) * e -
           (3.0 * k0 / 128.0 + 7.0 * k1 / 384.0) * K * e * e2 +
           (11.0 * k0 / 5120.0 + 31.0 * k1 / 15360.0) * K * K * e * e2 * e2;
}

} // namespace

SpaceFormContext boundary_constants(double kappa0, double kappa1, double edge_len, double K) {
    if (!(edge_len > 0.0)) throw invalid_input("boundary_constants: edge length must be > 0");
    SpaceFormContext ctx;
    ctx.K = K;
    ctx.edge_len = edge_len;
    ctx.kappa0 = kappa0;
    ctx.kappa1 = kappa1;
    ctx.ell = edge_len / 2.0;
    ctx.c1 = kappa0;

    if (K == 0.0) {
        ctx.c2 = (kappa1 - kappa0) / edge_len;
        return ctx;
    }
    const double r = std::sqrt(std::fabs(K));
    const double u = r * edge_len;
    if (K < 0.0 && std::fabs(std::sin(u)) < kResonanceTol)
        throw numeric_error("boundary_constants: resonance edge length for K < 0");
    if (edge_len < kTaylorEdge) {
        ctx.c2 = c2_series(kappa0, kappa1, edge_len, K);
        return ctx;
    }
    if (K > 0.0) {
        // k1 - k0 cosh u, written without forming cosh u - 1 implicitly
        const double sh = std::sinh(u / 2.0);
        ctx.c2 = r * (kappa1 - kappa0 - kappa0 * 2.0 * sh * sh) / std::sinh(u);
    } else {
        const double sn = std::sin(u / 2.0);
        ctx.c2 = r * (kappa1 - kappa0 + kappa0 * 2.0 * sn * sn) / std::sin(u);
    }
    return ctx;
}

double curvature_solution(const SpaceFormContext& ctx, double s) {
    if (s < 0.0 || s > ctx.edge_len)
        throw invalid_input("curvature_solution: s outside [0, edge length]");
    if (ctx.K == 0.0) return ctx.c1 + ctx.c2 * s;
    const double r = std::sqrt(std::fabs(ctx.K));
    if (ctx.K > 0.0) return ctx.c1 * std::cosh(r * s) + (ctx.c2 / r) * std::sinh(r * s);
    return ctx.c1 * std::cos(r * s) + (ctx.c2 / r) * std::sin(r * s);
}

double insertion_angle(double kappa0, double kappa1, double edge_len, double K) {
    const SpaceFormContext ctx = boundary_constants(kappa0, kappa1, edge_len, K);
    if (K == 0.0) return ctx.c1 * ctx.ell + 0.5 * ctx.c2 * ctx.ell * ctx.ell;
    if (edge_len < kTaylorEdge) return alpha_series(kappa0, kappa1, edge_len, K);
    const double r = std::sqrt(std::fabs(K));
    const double ul = r * ctx.ell;
    if (K > 0.0) {
        const double sh = std::sinh(ul / 2.0);
        return ctx.c1 * std::sinh(ul) / r + ctx.c2 * (2.0 * sh * sh) / (r * r);
    }
    const double sn = std::sin(ul / 2.0);
    return ctx.c1 * std::sin(ul) / r + ctx.c2 * (2.0 * sn * sn) / (r * r);
}

double proximity_deviation(double kappa0, double kappa1, double edge_len, double K) {
    if (K == 0.0) return 0.0;
    return std::fabs(insertion_angle(kappa0, kappa1, edge_len, K) -
                     insertion_angle(kappa0, kappa1, edge_len, 0.0));
}

} // namespace bhsub
