#pragma once

// Parametrized surfaces with first/second fundamental forms, principal
// curvatures and the layer Jacobian xi(s,u) = (1 - u k1)(1 - u k2).
// Built-in charts: the circular cone (intrinsic polar chart, so the
// parameter-plane distance equals the slant distance) and the rooftop
// surface (graph chart over the plane).

#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "deltabias/errors.hpp"

namespace deltabias {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;

struct FundamentalForms {
    Mat2 metric;        // g_{mu nu}
    Mat2 weingarten;    // h_mu^sigma (mixed shape operator)
    Vec2 principal;     // (k1, k2), eigenvalues of the Weingarten map
};

struct SurfaceGeometry {
    std::string name;
    std::function<Vec3(const Vec2&)> chart;
    std::function<FundamentalForms(const Vec2&)> forms;
    // Distance in the parameter plane to the nearest point of the singular
    // set (curves C and points P where smoothness fails); +inf if empty.
    std::function<double(const Vec2&)> singular_distance;
    std::string singular_set;       // human-readable description
    double exclusion_radius = 1e-9; // tube around the singular set

    bool is_singular(const Vec2& s) const { return singular_distance(s) <= exclusion_radius; }

    double gauss_curvature(const Vec2& s) const {
        const auto f = forms(s);
        return f.principal[0] * f.principal[1];
    }
    double mean_curvature(const Vec2& s) const {
        const auto f = forms(s);
        return 0.5 * (f.principal[0] + f.principal[1]);
    }
};

struct ConeSpec {
    double theta;  // half-opening angle, 0 < theta < pi/2

    bool valid() const { return theta > 0.0 && theta < M_PI / 2.0; }
};

struct RooftopSpec {
    double L;                 // ridge length
    double theta;             // half-opening angle of the wedge cross-section
    double smoothing_radius;  // C^2 fillet scale; 0 keeps the idealized surface

    bool valid() const {
        return L > 0.0 && theta > 0.0 && theta < M_PI / 2.0 && smoothing_radius >= 0.0;
    }
};

// Circular cone z = cot(theta) * sqrt(x^2 + y^2), parametrized so that |s|
// is the slant distance from the tip:  Sigma(s) = (s1 sin t, s2 sin t, |s| cos t).
// The nonzero principal curvature is cot(theta)/|s| along the circular
// direction; generators are straight (k1 = 0), so K = 0 everywhere off-tip.
inline SurfaceGeometry cone_surface(const ConeSpec& spec) {
    if (!spec.valid()) throw std::invalid_argument("cone_surface: need 0 < theta < pi/2");
    const double st = std::sin(spec.theta);
    const double ct = std::cos(spec.theta);

    SurfaceGeometry surf;
    surf.name = "cone";
    surf.singular_set = "tip (single point P at s = 0)";
    surf.chart = [st, ct](const Vec2& s) {
        return Vec3(st * s[0], st * s[1], ct * s.norm());
    };
    surf.singular_distance = [](const Vec2& s) { return s.norm(); };
    surf.forms = [st, ct](const Vec2& s) {
        const double sigma = s.norm();
        const Vec2 rad = s / sigma;                 // radial (generator) direction
        const Mat2 proj = Mat2::Identity() - rad * rad.transpose();
        FundamentalForms f;
        f.metric = st * st * Mat2::Identity() + ct * ct * rad * rad.transpose();
        const double k2 = ct / (st * sigma);
        f.weingarten = k2 * proj;
        f.principal = Vec2(0.0, k2);
        return f;
    };
    return surf;
}

namespace detail {

// Distance in the plane from p to the segment {|x| <= half_len, y = 0}.
inline double dist_to_ridge(const Vec2& p, double half_len) {
    const double dx = std::max(std::abs(p[0]) - half_len, 0.0);
    return std::hypot(dx, p[1]);
}

// Smoothed positive part: smooth_ramp(t, a) -> max(t, 0) as a -> 0, C-infinity
// for a > 0 and strictly positive everywhere.
inline double smooth_ramp(double t, double a) {
    return 0.5 * (t + std::hypot(t, a));
}

// Fundamental forms of a graph surface z = f(x, y) from gradient and Hessian.
inline FundamentalForms graph_forms(const Vec2& grad, const Mat2& hess) {
    FundamentalForms f;
    const double w = std::sqrt(1.0 + grad.squaredNorm());
    f.metric = Mat2::Identity() + grad * grad.transpose();
    const Mat2 second = hess / w;
    f.weingarten = f.metric.inverse() * second;
    const Eigen::EigenSolver<Mat2> es(f.weingarten);  // similar to a symmetric matrix
    double k1 = es.eigenvalues()[0].real();
    double k2 = es.eigenvalues()[1].real();
    if (k1 > k2) std::swap(k1, k2);
    f.principal = Vec2(k1, k2);
    return f;
}

} // namespace detail

// Rooftop surface: z = cot(theta) * dist((x,y), ridge segment) as a graph
// over the plane.  Flat pieces over |x| < L/2, conical end caps beyond, with
// every cross-section loop Gamma_z a stadium (two segments plus two
// homothetic semicircular arcs).  With smoothing_radius > 0 the distance
// function is replaced by a C-infinity fillet of that scale and curvatures in
// the fillet band are obtained by finite differences of the chart.
inline SurfaceGeometry rooftop_surface(const RooftopSpec& spec) {
    if (!spec.valid()) throw std::invalid_argument("rooftop_surface: bad spec");
    if (spec.smoothing_radius >= 0.5 * spec.L)
        throw InvalidSmoothing("rooftop_surface: fillet exceeds half the ridge length");

    const double cot = 1.0 / std::tan(spec.theta);
    const double half = 0.5 * spec.L;
    const double a = spec.smoothing_radius;

    SurfaceGeometry surf;
    surf.name = "rooftop";
    surf.singular_set = a == 0.0
        ? "ridge segment {(x,0,0): |x| <= L/2} plus the two interface lines x = +-L/2"
        : "empty (smoothed)";

    if (a == 0.0) {
        surf.chart = [cot, half](const Vec2& s) {
            return Vec3(s[0], s[1], cot * detail::dist_to_ridge(s, half));
        };
        surf.singular_distance = [half](const Vec2& s) {
            // ridge segment and the interface lines x = +-L/2
            const double d_ridge = detail::dist_to_ridge(s, half);
            const double d_iface = std::abs(std::abs(s[0]) - half);
            return std::min(d_ridge, d_iface);
        };
        surf.forms = [cot, half](const Vec2& s) {
            const double t = std::abs(s[0]) - half;
            if (t <= 0.0) {
                // planar strip: f = cot * |y|
                FundamentalForms f;
                Vec2 grad(0.0, cot * (s[1] > 0 ? 1.0 : -1.0));
                f.metric = Mat2::Identity() + grad * grad.transpose();
                f.weingarten = Mat2::Zero();
                f.principal = Vec2::Zero();
                return f;
            }
            // conical end cap centered at (+-L/2, 0): reuse the graph formulas
            const double cx = s[0] > 0 ? half : -half;
            const Vec2 q(s[0] - cx, s[1]);
            const double r = q.norm();
            const Vec2 grad = cot * q / r;
            const Mat2 hess = cot / r * (Mat2::Identity() - q * q.transpose() / (r * r));
            return detail::graph_forms(grad, hess);
        };
        return surf;
    }

    // Smoothed profile: rho(x,y) = sqrt(m(x)^2 + y^2) with
    // m(x) = smooth_ramp(sqrt(x^2 + a^2) - L/2, a); C-infinity everywhere.
    auto profile = [half, a](const Vec2& s) {
        const double m = detail::smooth_ramp(std::hypot(s[0], a) - half, a);
        return std::hypot(m, s[1]);
    };
    surf.chart = [cot, profile](const Vec2& s) {
        return Vec3(s[0], s[1], cot * profile(s));
    };
    surf.singular_distance = [](const Vec2&) { return std::numeric_limits<double>::infinity(); };
    surf.forms = [cot, profile, a](const Vec2& s) {
        // finite-difference gradient/Hessian of f = cot * rho at step ~ fillet/50
        const double h = std::max(1e-5, a / 50.0);
        auto f = [&](double x, double y) { return cot * profile(Vec2(x, y)); };
        Vec2 grad((f(s[0] + h, s[1]) - f(s[0] - h, s[1])) / (2 * h),
                  (f(s[0], s[1] + h) - f(s[0], s[1] - h)) / (2 * h));
        Mat2 hess;
        hess(0, 0) = (f(s[0] + h, s[1]) - 2 * f(s[0], s[1]) + f(s[0] - h, s[1])) / (h * h);
        hess(1, 1) = (f(s[0], s[1] + h) - 2 * f(s[0], s[1]) + f(s[0], s[1] - h)) / (h * h);
        hess(0, 1) = hess(1, 0) =
            (f(s[0] + h, s[1] + h) - f(s[0] + h, s[1] - h) - f(s[0] - h, s[1] + h) +
             f(s[0] - h, s[1] - h)) / (4 * h * h);
        return detail::graph_forms(grad, hess);
    };
    return surf;
}

// Points of the idealized cross-section loop Gamma_z of the rooftop surface
// (smoothing ignored): two segments y = +-z tan(theta), |x| <= L/2, joined by
// semicircular arcs of radius z tan(theta) about (+-L/2, 0).  Returned as
// (x, y) pairs; n_per_piece samples per segment/arc.
inline std::vector<Vec2> rooftop_cross_section(const RooftopSpec& spec, double z,
                                               int n_per_piece = 64) {
    if (z < 0.0) throw std::invalid_argument("rooftop_cross_section: z must be >= 0");
    const double r = z * std::tan(spec.theta);
    const double half = 0.5 * spec.L;
    std::vector<Vec2> pts;
    for (int i = 0; i < n_per_piece; ++i) {
        const double x = -half + spec.L * i / (n_per_piece - 1.0);
        pts.emplace_back(x, r);
        pts.emplace_back(x, -r);
    }
    for (int i = 0; i < n_per_piece; ++i) {
        const double phi = -M_PI / 2.0 + M_PI * i / (n_per_piece - 1.0);
        pts.emplace_back(half + r * std::cos(phi), r * std::sin(phi));    // right arc
        pts.emplace_back(-half - r * std::cos(phi), r * std::sin(phi));   // left arc
    }
    return pts;
}

// Layer Jacobian xi(s, u) = (1 - u k1)(1 - u k2); u > 0 points into the
// interior (convex) region by the normal convention.
inline double layer_jacobian(const SurfaceGeometry& surf, const Vec2& s, double u) {
    if (surf.is_singular(s))
        throw SingularPoint("layer_jacobian: point lies in the singular set of " + surf.name);
    const auto f = surf.forms(s);
    return (1.0 - u * f.principal[0]) * (1.0 - u * f.principal[1]);
}

struct SamplingPlan {
    std::vector<double> radii = {5.0, 10.0, 20.0, 40.0, 80.0};  // probe radii
    int pair_count = 100000;       // random pairs for the bi-Lipschitz bound
    int curvature_samples = 256;   // samples per probe radius
    double domain_radius = 100.0;  // parameter-plane sampling radius
    unsigned seed = 1;
};

struct AssumptionReport {
    std::string surface;
    double bilipschitz_c = 0.0;            // empirical inf |Sigma(s)-Sigma(t)| / |s-t|
    bool bilipschitz_ok = false;           // 0 < c < 1
    std::vector<double> probe_radii;
    std::vector<double> curvature_sup;     // max(|k1|,|k2|) on each probe circle
    bool asymptotically_planar = false;    // curvature_sup decreasing toward 0
    double ellipticity_lower = 0.0;        // c_- of the metric
    double ellipticity_upper = 0.0;        // c_+
    bool elliptic_ok = false;
    std::string unchecked = "regular-ends condition on the curves of the singular family";
};

// Samples the surface and reports empirical versions of assumptions (b)-(d).
// Violations are flagged in the report, never thrown.
inline AssumptionReport verify_assumptions(const SurfaceGeometry& surf,
                                           const SamplingPlan& plan = {}) {
    AssumptionReport rep;
    rep.surface = surf.name;
    std::mt19937_64 rng(plan.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    auto sample_point = [&](double radius) {
        for (;;) {
            Vec2 s(unit(rng) * radius, unit(rng) * radius);
            if (s.norm() <= radius && !surf.is_singular(s)) return s;
        }
    };

    double c_min = std::numeric_limits<double>::infinity();
    for (int i = 0; i < plan.pair_count; ++i) {
        const Vec2 s = sample_point(plan.domain_radius);
        const Vec2 t = sample_point(plan.domain_radius);
        const double ds = (s - t).norm();
        if (ds < 1e-9) continue;
        c_min = std::min(c_min, (surf.chart(s) - surf.chart(t)).norm() / ds);
    }
    rep.bilipschitz_c = c_min;
    rep.bilipschitz_ok = c_min > 0.0 && c_min <= 1.0 + 1e-12;

    rep.probe_radii = plan.radii;
    const double tube = std::max(surf.exclusion_radius, 1e-6);
    for (double R : plan.radii) {
        double sup = 0.0;
        for (int i = 0; i < plan.curvature_samples; ++i) {
            const double phi = 2.0 * M_PI * i / plan.curvature_samples;
            const Vec2 s(R * std::cos(phi), R * std::sin(phi));
            if (surf.singular_distance(s) <= tube) continue;
            const auto f = surf.forms(s);
            sup = std::max({sup, std::abs(f.principal[0]), std::abs(f.principal[1])});
        }
        rep.curvature_sup.push_back(sup);
    }
    rep.asymptotically_planar = true;
    for (std::size_t i = 1; i < rep.curvature_sup.size(); ++i)
        if (rep.curvature_sup[i] > rep.curvature_sup[i - 1] + 1e-12)
            rep.asymptotically_planar = false;

    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int i = 0; i < plan.curvature_samples * 4; ++i) {
        const Vec2 s = sample_point(plan.domain_radius);
        const Eigen::SelfAdjointEigenSolver<Mat2> es(surf.forms(s).metric);
        lo = std::min(lo, es.eigenvalues()[0]);
        hi = std::max(hi, es.eigenvalues()[1]);
    }
    rep.ellipticity_lower = lo;
    rep.ellipticity_upper = hi;
    rep.elliptic_ok = lo > 0.0 && std::isfinite(hi);
    return rep;
}

} // namespace deltabias
