#pragma once

// One-dimensional transverse operator h = -d^2/dx^2 - alpha*delta(x) + V(x),
// with V(x) = V0 on the biased half-line and 0 on the other.  Everything here
// is closed-form or a scalar root-find; this module is the single source of
// truth for the essential-spectrum threshold used by the 2D solvers.

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "deltabias/errors.hpp"

namespace deltabias {

enum class BiasSide { Interior, Exterior };

enum class Regime { Subcritical, Critical, Supercritical };

inline const char* to_string(Regime r) {
    switch (r) {
        case Regime::Subcritical: return "subcritical";
        case Regime::Critical: return "critical";
        case Regime::Supercritical: return "supercritical";
    }
    return "?";
}

struct CouplingParams {
    double alpha;                             // delta coupling strength, > 0
    double v0;                                // bias height, >= 0
    BiasSide bias_side = BiasSide::Interior;  // which region carries V0

    bool valid() const { return alpha > 0.0 && v0 >= 0.0; }
};

// Relative tolerance deciding the critical regime.  Kept tight so the
// presence/absence of the bound state is deterministic for exact inputs.
inline constexpr double kCriticalTol = 1e-12;

inline Regime classify_regime(const CouplingParams& p, double tol = kCriticalTol) {
    const double a2 = p.alpha * p.alpha;
    if (std::abs(p.v0 - a2) <= tol * a2) return Regime::Critical;
    return p.v0 < a2 ? Regime::Subcritical : Regime::Supercritical;
}

// Threshold of the essential spectrum: mu = -(alpha^2 - V0)^2 / (4 alpha^2)
// below the critical bias, 0 at and above it.
inline double essential_threshold(const CouplingParams& p) {
    if (classify_regime(p) != Regime::Subcritical) return 0.0;
    const double t = (p.alpha * p.alpha - p.v0) / (2.0 * p.alpha);
    return -t * t;
}

// The unique eigenvalue of h in the subcritical regime; coincides with the
// essential threshold of the full 3D operator.
inline std::optional<double> bound_state_energy(const CouplingParams& p) {
    if (classify_regime(p) != Regime::Subcritical) return std::nullopt;
    return essential_threshold(p);
}

struct TransverseSpectrum {
    double mu;                          // essential threshold
    std::optional<double> bound_state;  // present iff subcritical
    double kappa1;                      // decay rate sqrt(-mu) on the zero side
    double kappa2;                      // decay rate sqrt(V0 - mu) on the biased side
};

inline TransverseSpectrum transverse_spectrum(const CouplingParams& p) {
    TransverseSpectrum s;
    s.mu = essential_threshold(p);
    s.bound_state = bound_state_energy(p);
    s.kappa1 = std::sqrt(-s.mu);
    s.kappa2 = std::sqrt(p.v0 - s.mu);
    return s;
}

struct NeumannBoxParams {
    double d;  // half-width of the interval (-d, d)
};

// Left-hand side minus right-hand side of the spectral condition
//   kappa1 tanh(kappa1 d) + kappa2 tanh(kappa2 d) = alpha
// written as a function of e = -mu_d > 0.  Strictly increasing in e.
inline double neumann_condition(double e, const CouplingParams& p, double d) {
    const double k1 = std::sqrt(e);
    const double k2 = std::sqrt(e + p.v0);
    return k1 * std::tanh(k1 * d) + k2 * std::tanh(k2 * d) - p.alpha;
}

// Ground-state energy mu_d of h restricted to (-d,d) with Neumann ends,
// obtained as the unique negative root of the spectral condition.  Returns
// nullopt when no negative root exists (possible only for V0 > alpha^2 with
// d large enough, where the boxed operator is nonnegative).
inline std::optional<double> neumann_box_ground_energy(const CouplingParams& p,
                                                       const NeumannBoxParams& box,
                                                       double tol = 1e-12) {
    if (!p.valid() || box.d <= 0.0 || tol <= 0.0)
        throw std::invalid_argument("neumann_box_ground_energy: bad parameters");
    const double d = box.d;

    // At e -> 0+ the LHS tends to sqrt(V0) tanh(sqrt(V0) d); a negative root
    // exists iff that value is still below alpha.
    if (neumann_condition(0.0, p, d) >= 0.0) return std::nullopt;

    const double mu = essential_threshold(p);
    double e_lo = 1e-15;           // f < 0 here (checked above, f continuous)
    double e_hi = -mu + 4.0 / d;   // initial guess; expanded if needed
    int expansions = 0;
    while (neumann_condition(e_hi, p, d) <= 0.0) {
        e_hi *= 2.0;
        if (++expansions > 200)
            throw ConvergenceFailure("neumann_box_ground_energy: bracket expansion failed");
    }

    // Bisection with a safeguarded secant step.  Monotonicity of the
    // condition in e guarantees the bracket always contains the root.
    double f_lo = neumann_condition(e_lo, p, d);
    double f_hi = neumann_condition(e_hi, p, d);
    for (int it = 0; it < 400 && (e_hi - e_lo) > tol; ++it) {
        double e_mid;
        const double denom = f_hi - f_lo;
        if (denom != 0.0) {
            e_mid = e_lo - f_lo * (e_hi - e_lo) / denom;  // secant
            const double lo_guard = e_lo + 0.1 * (e_hi - e_lo);
            const double hi_guard = e_hi - 0.1 * (e_hi - e_lo);
            if (!(e_mid > lo_guard && e_mid < hi_guard))
                e_mid = 0.5 * (e_lo + e_hi);  // fall back to bisection
        } else {
            e_mid = 0.5 * (e_lo + e_hi);
        }
        const double f_mid = neumann_condition(e_mid, p, d);
        if (f_mid < 0.0) {
            e_lo = e_mid;
            f_lo = f_mid;
        } else {
            e_hi = e_mid;
            f_hi = f_mid;
        }
    }
    return -0.5 * (e_lo + e_hi);
}

struct UniformGrid1D {
    double x_min;
    double x_max;
    double h;

    std::size_t size() const {
        return static_cast<std::size_t>(std::floor((x_max - x_min) / h + 0.5)) + 1;
    }
    double x(std::size_t i) const { return x_min + static_cast<double>(i) * h; }
};

// Max-norm residual of the critical zero mode (psi = 1 for x <= 0,
// exp(-alpha x) for x > 0) under the finite-difference application of h with
// V0 = alpha^2.  Nodes within one spacing of the interaction point are
// excluded; away from it the residual is O(h^2).
inline double critical_zero_mode_residual(double alpha, const UniformGrid1D& grid,
                                          double eval_min = -1e300, double eval_max = 1e300) {
    if (alpha <= 0.0 || grid.h <= 0.0 || grid.x_max <= grid.x_min)
        throw InvalidGrid("critical_zero_mode_residual: bad grid");
    if (!(grid.x_min < 0.0 && grid.x_max > 0.0))
        throw InvalidGrid("critical_zero_mode_residual: grid must straddle x = 0");

    const auto psi = [alpha](double x) { return x <= 0.0 ? 1.0 : std::exp(-alpha * x); };
    const double v0 = alpha * alpha;
    const std::size_t n = grid.size();
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double x = grid.x(i);
        if (x < eval_min || x > eval_max) continue;
        if (std::abs(x) <= grid.h) continue;  // skip the delta point neighborhood
        const double lap = (psi(x + grid.h) - 2.0 * psi(x) + psi(x - grid.h)) / (grid.h * grid.h);
        const double v = x > 0.0 ? v0 : 0.0;
        worst = std::max(worst, std::abs(-lap + v * psi(x)));
    }
    return worst;
}

// A decaying trial function on [0, X] sampled uniformly, together with its
// derivative samples (the trial families used here are analytic, so the
// caller supplies both).
struct SampledHalflineFunction {
    double h;                    // sample spacing
    std::vector<double> values;  // phi(0), phi(h), ...
    std::vector<double> derivs;  // phi'(0), phi'(h), ...
};

inline SampledHalflineFunction sample_halfline(const std::function<double(double)>& phi,
                                               const std::function<double(double)>& dphi,
                                               double x_max, std::size_t n) {
    SampledHalflineFunction f;
    f.h = x_max / static_cast<double>(n - 1);
    f.values.resize(n);
    f.derivs.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(i) * f.h;
        f.values[i] = phi(x);
        f.derivs[i] = dphi(x);
    }
    return f;
}

struct HardyMargin {
    double margin;      // LHS - RHS of the Hardy-type inequality
    double quad_error;  // computable bound on the quadrature + tail error
};

namespace detail {

// Composite Simpson over uniformly sampled data using every `stride`-th point.
inline double simpson(const std::vector<double>& f, double h, std::size_t stride = 1) {
    const std::size_t n = (f.size() - 1) / stride;  // number of intervals
    const double hh = h * static_cast<double>(stride);
    double sum = 0.0;
    std::size_t m = n - (n % 2);  // even number of intervals for Simpson
    for (std::size_t i = 0; i + 2 <= m; i += 2) {
        sum += hh / 3.0 * (f[i * stride] + 4.0 * f[(i + 1) * stride] + f[(i + 2) * stride]);
    }
    if (n % 2) {  // trailing interval by trapezoid; negligible in the tail
        sum += hh / 2.0 * (f[(n - 1) * stride] + f[n * stride]);
    }
    return sum;
}

} // namespace detail

// Evaluates int_0^inf (|phi'|^2 + V0 |phi|^2) dx - sqrt(V0) |phi(0)|^2 by
// composite Simpson plus an analytic exponential tail estimate.  The
// inequality of the transverse operator guarantees margin >= -quad_error.
inline HardyMargin hardy_margin(const SampledHalflineFunction& phi, double v0,
                                double tail_fraction = 0.05) {
    if (v0 <= 0.0) throw std::invalid_argument("hardy_margin: v0 must be positive");
    const std::size_t n = phi.values.size();
    if (n < 9 || phi.derivs.size() != n)
        throw std::invalid_argument("hardy_margin: need >= 9 matching samples");

    std::vector<double> integrand(n);
    for (std::size_t i = 0; i < n; ++i)
        integrand[i] = phi.derivs[i] * phi.derivs[i] + v0 * phi.values[i] * phi.values[i];

    const double total = detail::simpson(integrand, phi.h);
    if (total == 0.0) return {0.0, 0.0};

    // Tail-decay heuristic: the last tenth of the interval must carry a small
    // fraction of the total mass, otherwise the [0, X] truncation is unsound.
    const std::size_t tail_start = (9 * (n - 1)) / 10;
    double tail_mass = 0.0;
    for (std::size_t i = tail_start; i + 1 < n; ++i)
        tail_mass += 0.5 * (integrand[i] + integrand[i + 1]) * phi.h;
    if (tail_mass > tail_fraction * total)
        throw InsufficientDecay("hardy_margin: sampled tail carries too much mass");

    // Richardson comparison against the half-resolution rule gives the
    // quadrature error scale; the tail bound assumes exponential decay at the
    // rate observed over the final samples.
    const double coarse = detail::simpson(integrand, phi.h, 2);
    double quad_err = std::abs(total - coarse);

    const double f_end = integrand[n - 1];
    const double f_prev = integrand[tail_start];
    double tail_bound = 0.0;
    if (f_end > 0.0 && f_prev > f_end) {
        const double span = phi.h * static_cast<double>(n - 1 - tail_start);
        const double rate = std::log(f_prev / f_end) / span;
        tail_bound = f_end / rate;
    } else if (f_end > 0.0) {
        tail_bound = f_end;  // no decay visible; charge one unit interval
    }
    quad_err += tail_bound + 1e-12 * total;

    const double lhs = total + tail_bound;
    const double rhs = std::sqrt(v0) * phi.values[0] * phi.values[0];
    return {lhs - rhs, quad_err};
}

} // namespace deltabias
