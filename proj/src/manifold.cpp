#include "bhsub/manifold.hpp"

#include <cmath>

#include "bhsub/spaceform.hpp"

namespace bhsub {

namespace {

constexpr double kAntipodalTol = 1e-12;
constexpr double kTangencyTol = 1e-10;
constexpr double kDenominatorTol = 1e-15;

double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm3(const Vec3& a) { return std::sqrt(dot3(a, a)); }
Vec3 cross3(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
Vec3 scale3(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
Vec3 add3(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

double dot2(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }
double norm2(const Vec2& a) { return std::hypot(a[0], a[1]); }

} // namespace

Vec3 sphere_exp(const Vec3& p, const Vec3& v) {
    const double nv = norm3(v);
    if (nv < 1e-15) return p;
    if (std::fabs(dot3(p, v)) > kTangencyTol * std::max(1.0, nv))
        throw invalid_input("sphere_exp: v is not tangent to p");
    Vec3 q = add3(scale3(std::cos(nv), p), scale3(std::sin(nv) / nv, v));
    const double n = norm3(q);
    return scale3(1.0 / n, q);
}

Vec3 sphere_log(const Vec3& p, const Vec3& q) {
    double c = dot3(p, q);
    if (c < -1.0 + kAntipodalTol) throw numeric_error("sphere_log: antipodal point pair");
    c = std::min(c, 1.0);
    const double theta = sphere_distance(p, q);
    if (theta < 1e-15) return {0.0, 0.0, 0.0};
    Vec3 w = add3(q, scale3(-c, p));
    const double nw = norm3(w);
    return scale3(theta / nw, w);
}

double sphere_distance(const Vec3& p, const Vec3& q) {
    const double chord = norm3(add3(p, scale3(-1.0, q)));
    return 2.0 * std::asin(std::min(1.0, chord / 2.0));
}

Vec3 sphere_midpoint(const Vec3& p, const Vec3& q) {
    return sphere_exp(p, scale3(0.5, sphere_log(p, q)));
}

Vec2 mobius_add(const Vec2& a, const Vec2& b) {
    const double ab = dot2(a, b);
    const double na2 = dot2(a, a);
    const double nb2 = dot2(b, b);
    const double den = 1.0 + 2.0 * ab + na2 * nb2;
    if (std::fabs(den) < kDenominatorTol)
        throw numeric_error("mobius_add: degenerate (numerically antipodal) configuration");
    const double ca = (1.0 + 2.0 * ab + nb2) / den;
    const double cb = (1.0 - na2) / den;
    return {ca * a[0] + cb * b[0], ca * a[1] + cb * b[1]};
}

Vec2 mobius_scale(double r, const Vec2& w) {
    const double nw = norm2(w);
    if (nw < 1e-15) return {0.0, 0.0};
    const double f = std::tanh(r * std::atanh(nw)) / nw;
    return {f * w[0], f * w[1]};
}

double disk_distance(const Vec2& a, const Vec2& b) {
    return 2.0 * std::atanh(norm2(mobius_add({-a[0], -a[1]}, b)));
}

Vec2 disk_log(const Vec2& a, const Vec2& b) {
    const Vec2 w = mobius_add({-a[0], -a[1]}, b);
    const double nw = norm2(w);
    if (nw < 1e-15) return {0.0, 0.0};
    const double len = 2.0 * std::atanh(nw);
    return {len * w[0] / nw, len * w[1] / nw};
}

Vec2 disk_exp(const Vec2& a, const Vec2& v) {
    const double nv = norm2(v);
    if (nv < 1e-15) return a;
    const double t = std::tanh(nv / 2.0);
    return mobius_add(a, {t * v[0] / nv, t * v[1] / nv});
}

Vec2 disk_midpoint(const Vec2& a, const Vec2& b) {
    return mobius_add(a, mobius_scale(0.5, mobius_add({-a[0], -a[1]}, b)));
}

Vec3 ManifoldPolygon::sphere_vertex(std::size_t j) const {
    auto v = vertex(j);
    return {v[0], v[1], v[2]};
}

Vec2 ManifoldPolygon::disk_vertex(std::size_t j) const {
    auto v = vertex(j);
    return {v[0], v[1]};
}

void ManifoldPolygon::validate() const {
    if (coords.size() % static_cast<std::size_t>(vdim()) != 0)
        throw invalid_input("manifold polygon: coordinate count does not match geometry");
    for (std::size_t j = 0; j < size(); ++j) {
        if (geometry == Geometry::sphere) {
            const double n = norm3(sphere_vertex(j));
            if (std::fabs(n - 1.0) > 1e-12)
                throw invalid_input("manifold polygon: sphere vertex " + std::to_string(j) +
                                    " is not unit length");
        } else {
            if (norm2(disk_vertex(j)) >= 1.0)
                throw invalid_input("manifold polygon: disk vertex " + std::to_string(j) +
                                    " is not strictly inside the unit disk");
        }
    }
}

double max_edge_length(const ManifoldPolygon& poly) {
    const std::size_t n = poly.size();
    const std::size_t edges = poly.closed ? n : n - 1;
    double h0 = 0.0;
    for (std::size_t j = 0; j < edges; ++j) {
        const std::size_t k = (j + 1) % n;
        const double e = poly.geometry == Geometry::sphere
                             ? sphere_distance(poly.sphere_vertex(j), poly.sphere_vertex(k))
                             : disk_distance(poly.disk_vertex(j), poly.disk_vertex(k));
        h0 = std::max(h0, e);
    }
    return h0;
}

CurvatureProfile manifold_curvature_estimate(const ManifoldPolygon& poly) {
    poly.validate();
    const std::size_t n = poly.size();
    if (n < 3) throw invalid_input("manifold_curvature_estimate: need at least 3 vertices");

    CurvatureProfile prof;
    const std::size_t lo = poly.closed ? 0 : 1;
    const std::size_t hi = poly.closed ? n : n - 1;
    for (std::size_t j = lo; j < hi; ++j) {
        const std::size_t jp = (j + n - 1) % n;
        const std::size_t jn = (j + 1) % n;
        double delta = 0.0, e = 0.0;
        if (poly.geometry == Geometry::sphere) {
            const Vec3 p = poly.sphere_vertex(j);
            const Vec3 vin = sphere_log(p, poly.sphere_vertex(jp));
            const Vec3 vout = sphere_log(p, poly.sphere_vertex(jn));
            const double lin = norm3(vin), lout = norm3(vout);
            if (lin < 1e-14 || lout < 1e-14)
                throw numeric_error("manifold_curvature_estimate: degenerate edge at vertex " +
                                    std::to_string(j));
            const Vec3 tin = scale3(-1.0 / lin, vin);
            const Vec3 tout = scale3(1.0 / lout, vout);
            // signed turn in the tangent plane, outward normal p
            delta = std::atan2(dot3(p, cross3(tin, tout)), dot3(tin, tout));
            e = 0.5 * (lin + lout);
        } else {
            const Vec2 p = poly.disk_vertex(j);
            const Vec2 din = disk_log(p, poly.disk_vertex(jp));
            const Vec2 dout = disk_log(p, poly.disk_vertex(jn));
            const double lin = norm2(din), lout = norm2(dout);
            if (lin < 1e-14 || lout < 1e-14)
                throw numeric_error("manifold_curvature_estimate: degenerate edge at vertex " +
                                    std::to_string(j));
            const Vec2 tin = {-din[0] / lin, -din[1] / lin};
            const Vec2 tout = {dout[0] / lout, dout[1] / lout};
            delta = std::atan2(tin[0] * tout[1] - tin[1] * tout[0], dot2(tin, tout));
            e = 0.5 * (lin + lout);
        }
        prof.exterior_angle.push_back(delta);
        prof.half_edge.push_back(e);
        prof.curvature.push_back(delta / e);
    }
    return prof;
}

namespace {

// Curvature value per vertex index; open polygons clamp the missing
// endpoint estimates to the nearest interior one.
std::vector<double> per_vertex_curvature(const ManifoldPolygon& poly) {
    const CurvatureProfile prof = manifold_curvature_estimate(poly);
    if (poly.closed) return prof.curvature;
    std::vector<double> kap;
    kap.reserve(poly.size());
    kap.push_back(prof.curvature.front());
    kap.insert(kap.end(), prof.curvature.begin(), prof.curvature.end());
    kap.push_back(prof.curvature.back());
    return kap;
}

} // namespace

ManifoldPolygon manifold_subdivide_step(const ManifoldPolygon& poly) {
    poly.validate();
    const double K = poly.curvature_K();
    const double h0 = max_edge_length(poly);
    if (!(std::fabs(K) * h0 * h0 < 0.25))
        throw invalid_input("manifold_subdivide_step: diameter condition |K| h0^2 < 1/4 violated"
                            " (h0 = " + std::to_string(h0) + ")");

    const std::vector<double> kap = per_vertex_curvature(poly);
    const std::size_t n = poly.size();
    const std::size_t edges = poly.closed ? n : n - 1;

    ManifoldPolygon out;
    out.geometry = poly.geometry;
    out.closed = poly.closed;
    out.coords.reserve(poly.coords.size() * 2);

    auto push3 = [&](const Vec3& v) { out.coords.insert(out.coords.end(), v.begin(), v.end()); };
    auto push2 = [&](const Vec2& v) { out.coords.insert(out.coords.end(), v.begin(), v.end()); };

    for (std::size_t j = 0; j < n; ++j) {
        // even rule: retain the vertex bit-identically
        auto src = poly.vertex(j);
        out.coords.insert(out.coords.end(), src.begin(), src.end());
        if (j >= edges) break; // open polygon: no insertion after the last vertex

        const std::size_t k = (j + 1) % n;
        if (poly.geometry == Geometry::sphere) {
            const Vec3 p = poly.sphere_vertex(j), q = poly.sphere_vertex(k);
            const double e = sphere_distance(p, q);
            if (e < 1e-14) throw numeric_error("manifold_subdivide_step: degenerate edge");
            const double alpha = insertion_angle(kap[j], kap[k], e, K);
            const Vec3 mid = sphere_midpoint(p, q);
            Vec3 t = sphere_log(mid, q);
            t = scale3(1.0 / norm3(t), t);
            const Vec3 left = cross3(mid, t);
            const double disp = -(e / 2.0) * std::tan(alpha / 2.0); // convex side
            push3(sphere_exp(mid, scale3(disp, left)));
        } else {
            const Vec2 p = poly.disk_vertex(j), q = poly.disk_vertex(k);
            const double e = disk_distance(p, q);
            if (e < 1e-14) throw numeric_error("manifold_subdivide_step: degenerate edge");
            const double alpha = insertion_angle(kap[j], kap[k], e, K);
            const Vec2 mid = disk_midpoint(p, q);
            Vec2 t = disk_log(mid, q);
            const double nt = norm2(t);
            t = {t[0] / nt, t[1] / nt};
            const Vec2 left = {-t[1], t[0]};
            const double disp = -(e / 2.0) * std::tan(alpha / 2.0);
            push2(disk_exp(mid, {disp * left[0], disp * left[1]}));
        }
    }
    out.validate();
    return out;
}

ManifoldPolygon manifold_subdivide(const ManifoldPolygon& poly, int iters) {
    if (iters < 0) throw invalid_input("manifold_subdivide: iters must be >= 0");
    ManifoldPolygon out = poly;
    for (int i = 0; i < iters; ++i) out = manifold_subdivide_step(out);
    return out;
}

} // namespace bhsub
