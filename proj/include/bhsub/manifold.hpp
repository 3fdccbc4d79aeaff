#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "bhsub/errors.hpp"
#include "bhsub/fairness.hpp"

namespace bhsub {

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;

// ---------------------------------------------------------------------------
// S^2 kernel (unit sphere in R^3)
// ---------------------------------------------------------------------------

/// exp_p(v) = cos(|v|) p + sin(|v|) v/|v| for a tangent vector v at p.
/// Returns p when |v| < 1e-15; the result is renormalized to absorb drift.
/// Throws invalid_input when v is not tangent to p within 1e-10.
Vec3 sphere_exp(const Vec3& p, const Vec3& v);

/// log_p(q) = (theta/sin theta)(q - cos theta p), |log_p(q)| = theta =
/// arccos<p,q>. Throws numeric_error for an antipodal pair
/// (<p,q> < -1 + 1e-12).
Vec3 sphere_log(const Vec3& p, const Vec3& q);

/// Geodesic distance, evaluated in the cancellation-safe chord form
/// 2 asin(|p-q|/2).
double sphere_distance(const Vec3& p, const Vec3& q);

Vec3 sphere_midpoint(const Vec3& p, const Vec3& q);

// ---------------------------------------------------------------------------
// H^2 kernel (Poincare disk, gyrovector operations)
// ---------------------------------------------------------------------------

/// Mobius (gyrovector) addition. Throws numeric_error when the
/// denominator falls below 1e-15 (numerically antipodal configuration).
Vec2 mobius_add(const Vec2& a, const Vec2& b);

/// Gyrovector scalar multiplication r (x) w = tanh(r artanh|w|) w/|w|.
Vec2 mobius_scale(double r, const Vec2& w);

/// d(a, b) = 2 artanh |(-a) (+) b|.
double disk_distance(const Vec2& a, const Vec2& b);

/// Tangent vector at a pointing to b, with Euclidean direction of
/// (-a) (+) b (the model is conformal) and length d(a, b).
Vec2 disk_log(const Vec2& a, const Vec2& b);

/// Inverse of disk_log: the point at hyperbolic distance |v| from a in
/// the direction of v.
Vec2 disk_exp(const Vec2& a, const Vec2& v);

/// a (+) 1/2 (x) ((-a) (+) b).
Vec2 disk_midpoint(const Vec2& a, const Vec2& b);

// ---------------------------------------------------------------------------
// Manifold polygons and subdivision
// ---------------------------------------------------------------------------

enum class Geometry { sphere, disk };

/// Vertices on S^2 (unit 3-vectors, norm within 1e-12 of 1) or in the
/// Poincare disk (strictly inside the unit circle).
struct ManifoldPolygon {
    Geometry geometry = Geometry::sphere;
    bool closed = true;
    std::vector<double> coords; ///< 3 doubles per sphere vertex, 2 per disk vertex

    int vdim() const { return geometry == Geometry::sphere ? 3 : 2; }
    double curvature_K() const { return geometry == Geometry::sphere ? 1.0 : -1.0; }
    std::size_t size() const { return coords.size() / static_cast<std::size_t>(vdim()); }

    std::span<const double> vertex(std::size_t j) const {
        return {coords.data() + j * static_cast<std::size_t>(vdim()),
                static_cast<std::size_t>(vdim())};
    }

    Vec3 sphere_vertex(std::size_t j) const;
    Vec2 disk_vertex(std::size_t j) const;

    /// Validates the per-vertex containment invariants.
    void validate() const;
};

double max_edge_length(const ManifoldPolygon& poly);

/// Geodesic exterior angle at each vertex (signed, positive = left turn,
/// measured in the tangent plane) divided by the mean incident geodesic
/// edge length. Open polygons exclude the endpoint vertices.
CurvatureProfile manifold_curvature_estimate(const ManifoldPolygon& poly);

/// One manifold refinement step. The even rule retains vertices exactly;
/// the odd rule solves the reduced ODE on each edge for the insertion
/// angle alpha_j (curvatures re-estimated from the current level) and
/// displaces the geodesic midpoint to the convex side of the edge by
/// geodesic distance (e_j/2) tan(alpha_j/2) -- the sagitta of a circular
/// arc with that half-chord and half-turning, which the spec's flat-limit
/// rationale requires (the displacement is odd in alpha).
///
/// Throws invalid_input when the diameter condition |K| h0^2 < 1/4 fails
/// and numeric_error on degenerate or antipodal edges.
ManifoldPolygon manifold_subdivide_step(const ManifoldPolygon& poly);

ManifoldPolygon manifold_subdivide(const ManifoldPolygon& poly, int iters);

} // namespace bhsub
