#pragma once

// Named experiments reproducing the spectral claims: parameter scans over the
// bias strength and angular momentum channels, the exterior-bias positivity
// check, the rooftop (broken-line) problem and the transverse summary table.
// Every driver is deterministic given its inputs and returns a ScanReport.

#include <cmath>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "deltabias/discretize.hpp"
#include "deltabias/eigensolve.hpp"
#include "deltabias/errors.hpp"
#include "deltabias/report.hpp"
#include "deltabias/transverse.hpp"

namespace deltabias {

struct GridLadder {
    std::vector<double> boxes = {20.0, 40.0, 80.0};  // full box side, ascending
    double spacing = 0.1;
};

// Staggered halfplane grid for the partial-wave problem: r in (0, box/2),
// z in (-Z, Z), aspect ratio hz/hr = cot(theta) so the delta halfline passes
// through nodes.
inline Grid2D make_partial_wave_grid(double box, double spacing, double theta) {
    const double cot = 1.0 / std::tan(theta);
    const double hr = spacing, hz = spacing * cot;
    const int nr = std::max(4, static_cast<int>(std::lround(0.5 * box / hr)));
    const int nz = 2 * std::max(4, static_cast<int>(std::lround(0.5 * box / hz)));
    Grid2D g;
    g.offset = true;
    g.nr = nr;
    g.nz = nz;
    g.r_extent = nr * hr;
    g.z_extent = 0.5 * nz * hz;
    return g;
}

// Node-centered planar grid for the broken-line problem, with the vertex of
// the broken line on the origin node and both rays node-aligned.
inline Grid2D make_planar_grid(double box, double spacing, double theta) {
    const bool straight = std::abs(theta - M_PI / 2.0) < 1e-12;
    const double cot = straight ? 1.0 : 1.0 / std::tan(theta);
    const double hy = spacing, hz = straight ? spacing : spacing * cot;
    const int ny = 2 * std::max(4, static_cast<int>(std::lround(0.5 * box / hy)));
    const int nz = 2 * std::max(4, static_cast<int>(std::lround(0.5 * box / hz)));
    Grid2D g;
    g.offset = false;
    g.nr = ny;
    g.nz = nz;
    g.r_extent = 0.5 * ny * hy;
    g.z_extent = 0.5 * nz * hz;
    return g;
}

// Broken line z = cot(theta) |y| clipped at the grid box; a straight line for
// theta = pi/2.
inline DeltaLineSpec broken_line(double theta, double alpha, const Grid2D& grid) {
    const bool straight = std::abs(theta - M_PI / 2.0) < 1e-12;
    DeltaLineSpec spec;
    spec.alpha = alpha;
    if (straight) {
        spec.polyline = {Vec2(-grid.r_extent, 0.0), Vec2(grid.r_extent, 0.0)};
    } else {
        const double cot = 1.0 / std::tan(theta);
        spec.polyline = {Vec2(-grid.r_extent, grid.r_extent * cot), Vec2(0.0, 0.0),
                         Vec2(grid.r_extent, grid.r_extent * cot)};
    }
    return spec;
}

inline EigenProblem planar_broken_line_problem(double theta, const CouplingParams& params,
                                               const Grid2D& grid) {
    const bool straight = std::abs(theta - M_PI / 2.0) < 1e-12;
    BiasRegion region = straight
        ? BiasRegion{[](const Vec2& p) { return p[1] > 1e-12; }, "upper-halfplane"}
        : (params.bias_side == BiasSide::Interior ? wedge_interior(theta)
                                                  : wedge_exterior(theta));
    return assemble_planar_delta(broken_line(theta, params.alpha, grid), params, region, grid);
}

// Exact lowest eigenvalue of the straight-line problem on the Dirichlet box
// (-L/2, L/2)^2: the problem separates into the transverse 1D delta with
// Dirichlet ends (energy -kappa^2, kappa = (alpha/2) tanh(kappa L/2)) plus
// the longitudinal Dirichlet ground energy (pi/L)^2.
inline double straight_line_box_energy(double alpha, double box) {
    const double d = 0.5 * box;
    double k = 0.5 * alpha;
    for (int i = 0; i < 200; ++i) k = 0.5 * alpha * std::tanh(k * d);  // contraction
    return -k * k + (M_PI / box) * (M_PI / box);
}

// Discretization slack C*h calibrated on the separable straight-line case,
// where the exact finite-box eigenvalue is known in closed form.
inline double discretization_slack(double alpha, double spacing, double box = 20.0) {
    const Grid2D grid = make_planar_grid(box, spacing, M_PI / 2.0);
    const auto prob = planar_broken_line_problem(M_PI / 2.0, {alpha, 0.0}, grid);
    const auto res = lowest_eigenpairs(prob, 1, 1e-9);
    const double err = std::abs(res.values[0] - straight_line_box_energy(alpha, box));
    // padded: box-truncation effects on other geometries do not scale with h
    return 2.0 * err + 1e-4;
}

namespace detail {

inline EigRow make_row(const std::string& id, int m, const CouplingParams& p, double theta,
                       double box, double spacing, int index, double value, double residual,
                       const std::string& cls) {
    EigRow r;
    r.experiment_id = id;
    r.m = m;
    r.v0 = p.v0;
    r.alpha = p.alpha;
    r.theta = theta;
    r.box = box;
    r.spacing = spacing;
    r.index = index;
    r.eigenvalue = value;
    r.residual = residual;
    r.classification = cls;
    return r;
}

} // namespace detail

// --- cone bias scan (m = 0 channel vs V0) --------------------------------

inline ScanReport cone_bias_scan(double theta, double alpha, const std::vector<double>& v0_list,
                                 BiasSide bias_side, const GridLadder& ladder) {
    if (v0_list.empty() || ladder.boxes.size() < 3)
        throw std::invalid_argument("cone_bias_scan: need v0 points and >= 3 ladder boxes");
    ScanReport rep;
    rep.experiment_id = "cone-scan";
    rep.axis_labels = {"v0"};
    rep.axis = v0_list;

    const ConeSpec cone{theta};
    for (double v0 : v0_list)
        rep.threshold_curve.emplace_back(v0, essential_threshold({alpha, v0, bias_side}));

    // Full box ladder at the first scan point: box-stability classification.
    // The margin below mu is set to zero here: on the node-aligned diagonal
    // grids the delta-line discretization shifts the essential edge upward
    // (measured ~ +1.3e-4 at spacing 0.125), and the Dirichlet box makes the
    // computed value an upper bound, so a box-stable value strictly below mu
    // sits below the discretized essential edge by even more. A positive
    // margin would mask the weakly (~ 3e-4) bound near-threshold states that
    // this scan exists to detect; the drift test still rejects box artifacts,
    // whose values drift by the change in the longitudinal confinement.
    const CouplingParams p0{alpha, v0_list.front(), bias_side};
    const double mu0 = essential_threshold(p0);
    std::vector<EigenProblem> problems;
    for (double box : ladder.boxes)
        problems.push_back(
            assemble_partial_wave(0, cone, p0, make_partial_wave_grid(box, ladder.spacing, theta)));
    ClassifyOpts copts;
    copts.margin = 0.0;
    const auto cls = classify_spectrum(problems, mu0, 2, copts);
    bool discrete_at_start = false;
    for (std::size_t i = 0; i < cls.tags.size(); ++i) {
        const bool disc = cls.tags[i] == SpectralTag::Discrete;
        discrete_at_start |= disc && cls.values[i] < mu0;
        rep.rows.push_back(detail::make_row("cone-scan", 0, p0, theta, ladder.boxes.back(),
                                            ladder.spacing, static_cast<int>(i), cls.values[i],
                                            cls.drift[i],
                                            disc ? "Discrete" : "EssentialEdgeArtifact"));
    }

    // Scan. Two ingredients per V0 point:
    //  - a continuity curve sampled at the fixed box ladder.boxes[0], so that
    //    adjacent points share the same (smooth-in-V0) discretization bias;
    //  - a below-threshold certificate: since the Dirichlet box gives an
    //    upper bound that decreases with the box, the value is escalated
    //    through the larger ladder boxes while it still sits at or above mu
    //    and keeps drifting; the point is certified once the value crosses
    //    strictly below mu. Near V0 = 0 the state is so weakly bound that
    //    only the large boxes resolve the crossing.
    const double box_small = 0.5 * ladder.boxes[0];
    const double box_curve = ladder.boxes[0];
    std::vector<double> curve;
    std::optional<double> merge_cutoff;
    bool below_everywhere = true;
    bool converged_above = false;
    for (double v0 : v0_list) {
        const CouplingParams p{alpha, v0, bias_side};
        const double mu = essential_threshold(p);
        const double thr = 1e-3 * std::max(std::abs(mu), 0.1);
        const auto solve_box = [&](double box) {
            return lowest_eigenpairs(
                assemble_partial_wave(0, cone, p,
                                      make_partial_wave_grid(box, ladder.spacing, theta)),
                1, 1e-7).values[0];
        };
        double prev = solve_box(box_small);
        double val = solve_box(box_curve);
        curve.push_back(val);
        double drift = std::abs(val - prev);
        double box_used = box_curve;
        if (v0 == v0_list.front()) {
            // the full ladder above already escalated this point
            val = cls.values[0];
            drift = cls.drift[0];
            box_used = ladder.boxes.back();
        } else {
            for (std::size_t b = 1; b < ladder.boxes.size() && val >= mu && drift >= thr; ++b) {
                prev = val;
                val = solve_box(ladder.boxes[b]);
                drift = std::abs(val - prev);
                box_used = ladder.boxes[b];
            }
        }
        const bool certified = val < mu;
        const bool disc = certified && drift < thr;
        rep.rows.push_back(detail::make_row("cone-scan", 0, p, theta, box_used, ladder.spacing,
                                            0, val, drift,
                                            disc ? "Discrete" : "EssentialEdgeArtifact"));
        if (!certified) {
            below_everywhere = false;
            if (drift < thr) converged_above = true;
            if (!merge_cutoff) merge_cutoff = v0;
        }
    }

    double max_jump = 0.0;
    for (std::size_t i = 1; i < curve.size(); ++i)
        max_jump = std::max(max_jump, std::abs(curve[i] - curve[i - 1]));

    {
        std::ostringstream iq;
        iq << "exists i: lambda_i = " << (cls.values.empty() ? 0.0 : cls.values[0])
           << " < mu(V0=" << v0_list.front() << ") = " << mu0 << " with box-stable drift";
        // absence is only evidenced by a box-stable value at or above mu; a
        // still-drifting ladder just failed to resolve the question
        const Verdict v = discrete_at_start ? Verdict::Confirmed
                          : cls.drift[0] < cls.stability_threshold ? Verdict::Refuted
                                                                   : Verdict::Inconclusive;
        rep.verdicts.push_back({"discrete-spectrum-nonempty", iq.str(), v});
    }
    {
        std::ostringstream iq;
        iq << "lambda_1(V0) < mu(V0) certified at every scan point (box-escalated upper bounds)";
        rep.verdicts.push_back({"curve-below-threshold", iq.str(),
                                below_everywhere ? Verdict::Confirmed
                                : converged_above ? Verdict::Refuted
                                                  : Verdict::Inconclusive});
    }
    {
        std::ostringstream iq;
        iq << "max adjacent jump " << max_jump << " < 5e-3 (continuity in V0)";
        rep.verdicts.push_back({"eigenvalue-continuity", iq.str(),
                                max_jump < 5e-3 ? Verdict::Confirmed : Verdict::Inconclusive});
    }
    if (merge_cutoff)
        rep.notes.push_back("empirical cutoff: ground state merges into the threshold near v0 = " +
                            std::to_string(*merge_cutoff) + " (observation, not a claim check)");
    else
        rep.notes.push_back("no threshold merge observed on the scanned v0 range");
    return rep;
}

// --- angular-momentum mode scan ------------------------------------------

inline ScanReport mode_scan(double theta, double alpha, double v0, const std::vector<int>& m_list,
                            const GridLadder& ladder) {
    bool has_zero = false, has_nonzero = false;
    for (int m : m_list) (m == 0 ? has_zero : has_nonzero) = true;
    if (!has_zero || !has_nonzero)
        throw std::invalid_argument("mode_scan: m_list must contain 0 and a nonzero m");

    ScanReport rep;
    rep.experiment_id = "mode-scan";
    rep.axis_labels = {"m"};
    for (int m : m_list) rep.axis.push_back(m);

    const ConeSpec cone{theta};
    const CouplingParams p{alpha, v0, BiasSide::Interior};
    const double mu = essential_threshold(p);
    rep.threshold_curve.emplace_back(v0, mu);

    // the margin below mu is the calibrated discretization slack, so the O(h)
    // bias of the delta line cannot masquerade as a discrete eigenvalue
    ClassifyOpts copts;
    copts.margin = discretization_slack(alpha, ladder.spacing);
    rep.notes.push_back("classification margin below mu: " + std::to_string(*copts.margin));

    bool nonzero_clean = true;
    bool drift_toward_mu = true;
    std::vector<double> channel_min;
    for (int m : m_list) {
        std::vector<EigenProblem> problems;
        for (double box : ladder.boxes)
            problems.push_back(assemble_partial_wave(
                m, cone, p, make_partial_wave_grid(box, ladder.spacing, theta)));
        const auto cls = classify_spectrum(problems, mu, 2, copts);
        channel_min.push_back(cls.values[0]);
        for (std::size_t i = 0; i < cls.tags.size(); ++i) {
            const bool disc = cls.tags[i] == SpectralTag::Discrete;
            rep.rows.push_back(detail::make_row("mode-scan", m, p, theta, ladder.boxes.back(),
                                                ladder.spacing, static_cast<int>(i),
                                                cls.values[i], cls.drift[i],
                                                disc ? "Discrete" : "EssentialEdgeArtifact"));
            if (m != 0 && disc && cls.values[i] < mu) nonzero_clean = false;
        }
        // baseline behavior: values in the m != 0 channels approach mu from
        // above (up to the discretization slack)
        if (m != 0 && cls.values[0] < mu - *copts.margin - 10.0 * cls.stability_threshold)
            drift_toward_mu = false;
    }

    {
        std::ostringstream iq;
        iq << "no classified-Discrete eigenvalue below mu = " << mu << " in any m != 0 channel";
        rep.verdicts.push_back({"no-higher-modes", iq.str(),
                                nonzero_clean && drift_toward_mu ? Verdict::Confirmed
                                                                 : Verdict::Inconclusive});
    }
    {
        bool monotone = true;
        for (std::size_t i = 0; i < m_list.size(); ++i)
            for (std::size_t j = 0; j < m_list.size(); ++j)
                if (std::abs(m_list[i]) < std::abs(m_list[j]) &&
                    channel_min[i] > channel_min[j] + 1e-9)
                    monotone = false;
        rep.verdicts.push_back({"centrifugal-monotonicity",
                                "channel minimum nondecreasing in |m|",
                                monotone ? Verdict::Confirmed : Verdict::Inconclusive});
    }
    return rep;
}

// --- exterior critical/supercritical emptiness ---------------------------

inline ScanReport exterior_positivity_check(double theta, double alpha, double v0,
                                            const GridLadder& ladder) {
    if (v0 < alpha * alpha - 1e-12)
        throw std::invalid_argument("exterior_positivity_check: needs v0 >= alpha^2");
    ScanReport rep;
    rep.experiment_id = "exterior-check";
    rep.axis_labels = {"m"};

    const ConeSpec cone{theta};
    const CouplingParams p{alpha, v0, BiasSide::Exterior};
    const double slack = discretization_slack(alpha, ladder.spacing);
    rep.notes.push_back("discretization slack (calibrated on the separable line): " +
                        std::to_string(slack));

    double global_min = 1e300;
    const double box = ladder.boxes[ladder.boxes.size() - 2];
    for (int m : {0, 1, 2}) {
        rep.axis.push_back(m);
        const auto res = lowest_eigenpairs(
            assemble_partial_wave(m, cone, p, make_partial_wave_grid(box, ladder.spacing, theta)),
            1, 1e-8);
        global_min = std::min(global_min, res.values[0]);
        rep.rows.push_back(detail::make_row("exterior-check", m, p, theta, box, ladder.spacing,
                                            0, res.values[0], res.residuals[0], "scan"));
    }
    std::ostringstream iq;
    iq << "min over m in {0,1,2} of lambda_1 = " << global_min << " >= -slack = " << -slack;
    rep.verdicts.push_back({"exterior-spectrum-nonnegative", iq.str(),
                            global_min >= -slack ? Verdict::Confirmed : Verdict::Refuted});
    return rep;
}

// --- rooftop: planar broken-line eigenvalues + trial energy --------------

inline ScanReport rooftop_lambda(double theta, double alpha, double v0,
                                 const GridLadder& ladder, int k = 6) {
    if (v0 < 0.0 || v0 > alpha * alpha + 1e-12)
        throw std::invalid_argument("rooftop_lambda: needs 0 <= v0 <= alpha^2");
    ScanReport rep;
    rep.experiment_id = "rooftop";
    rep.axis_labels = {"index"};

    const CouplingParams p{alpha, v0, BiasSide::Interior};
    const double mu = essential_threshold(p);
    rep.threshold_curve.emplace_back(v0, mu);

    ClassifyOpts copts;
    copts.margin = discretization_slack(alpha, ladder.spacing);
    rep.notes.push_back("classification margin below mu: " + std::to_string(*copts.margin));
    // Box artifacts of the continuum drift by the change in the longitudinal
    // confinement ~ (pi/L)^2 between the two largest boxes; half of that
    // separates them from converged bound states and, unlike the default
    // 1e-3 * max(|mu|, 0.1), does not reject genuinely converged weakly bound
    // states when mu is near 0 (critical bias).
    {
        const double lp = ladder.boxes[ladder.boxes.size() - 2];
        const double ll = ladder.boxes.back();
        const double artifact_drift = (M_PI / lp) * (M_PI / lp) - (M_PI / ll) * (M_PI / ll);
        copts.stability_threshold =
            std::max(1e-3 * std::max(std::abs(mu), 0.1), 0.5 * artifact_drift);
    }

    std::vector<EigenProblem> problems;
    for (double box : ladder.boxes)
        problems.push_back(
            planar_broken_line_problem(theta, p, make_planar_grid(box, ladder.spacing, theta)));
    const auto cls = classify_spectrum(problems, mu, k, copts);
    int n_discrete = 0;
    for (std::size_t i = 0; i < cls.tags.size(); ++i) {
        const bool disc = cls.tags[i] == SpectralTag::Discrete;
        if (disc) ++n_discrete;
        rep.axis.push_back(static_cast<double>(i));
        rep.rows.push_back(detail::make_row("rooftop", 0, p, theta, ladder.boxes.back(),
                                            ladder.spacing, static_cast<int>(i), cls.values[i],
                                            cls.drift[i],
                                            disc ? "Discrete" : "EssentialEdgeArtifact"));
    }
    std::ostringstream iq;
    iq << n_discrete << " eigenvalue(s) classified Discrete below mu = " << mu;
    rep.verdicts.push_back({"broken-line-bound-states", iq.str(),
                            n_discrete > 0 ? Verdict::Confirmed : Verdict::Inconclusive});
    if (n_discrete == 0)
        rep.notes.push_back("NoBoundState: no eigenvalue classified Discrete (legitimate for "
                            "large opening angles); trial-energy step skipped");
    return rep;
}

inline std::vector<double> discrete_lambdas(const ScanReport& rep) {
    std::vector<double> out;
    for (const auto& r : rep.rows)
        if (r.classification == "Discrete") out.push_back(r.eigenvalue);
    return out;
}

// Normalized mollifier bump exp(-1/(1-x^2)) on (-1, 1); the derivative norm
// is computed once by composite Simpson.
struct BumpProfile {
    double gprime_norm_sq;
};

inline const BumpProfile& mollifier_bump() {
    static const BumpProfile prof = [] {
        const int n = 20001;  // odd, endpoints vanish to all orders
        const double h = 2.0 / (n - 1);
        auto g0 = [](double x) {
            const double t = 1.0 - x * x;
            return t > 1e-12 ? std::exp(-1.0 / t) : 0.0;
        };
        auto dg0 = [&](double x) {
            const double t = 1.0 - x * x;
            return t > 1e-12 ? g0(x) * (-2.0 * x / (t * t)) : 0.0;
        };
        double norm2 = 0.0, dnorm2 = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = -1.0 + i * h;
            const double w = (i == 0 || i == n - 1) ? 1.0 : (i % 2 ? 4.0 : 2.0);
            norm2 += w * g0(x) * g0(x);
            dnorm2 += w * dg0(x) * dg0(x);
        }
        norm2 *= h / 3.0;
        dnorm2 *= h / 3.0;
        return BumpProfile{dnorm2 / norm2};
    }();
    return prof;
}

struct RooftopTrial {
    double lambda;                // planar broken-line eigenvalue, < 0
    double epsilon;               // longitudinal scale, > 0
    double gprime_norm_sq;        // ||g'||^2 of the normalized bump
    double psi_norm_sq = 1.0;     // ||psi||^2 of the factorized trial

    bool valid() const { return lambda < 0.0 && epsilon > 0.0 && gprime_norm_sq > 0.0; }
};

// Separated-variables trial energy (epsilon ||g'||^2 + lambda) ||psi||^2;
// negative whenever epsilon < |lambda| / ||g'||^2.
inline double rooftop_trial_energy(const RooftopTrial& trial) {
    if (!trial.valid()) throw std::invalid_argument("rooftop_trial_energy: invalid trial");
    return (trial.epsilon * trial.gprime_norm_sq + trial.lambda) * trial.psi_norm_sq;
}

// --- transverse summary --------------------------------------------------

inline ScanReport transverse_report(double alpha, const std::vector<double>& v0_list,
                                    const std::vector<double>& d_list, unsigned seed = 1) {
    if (v0_list.empty() || d_list.empty())
        throw std::invalid_argument("transverse_report: empty parameter lists");
    ScanReport rep;
    rep.experiment_id = "transverse";
    rep.axis_labels = {"v0", "d"};
    rep.axis = v0_list;

    bool lemma_bound_ok = true, monotone_ok = true, supercritical_ok = true;
    const double d0 = 5.0 / alpha;
    for (double v0 : v0_list) {
        const CouplingParams p{alpha, v0};
        const double mu = essential_threshold(p);
        rep.threshold_curve.emplace_back(v0, mu);
        if (auto bs = bound_state_energy(p))
            rep.rows.push_back(detail::make_row("transverse", 0, p, 0.0, 0.0, 0.0, -1, *bs,
                                                0.0, "bound-state"));
        double prev = -1e300;
        for (double d : d_list) {
            const auto mu_d = neumann_box_ground_energy(p, {d});
            if (mu_d) {
                rep.rows.push_back(detail::make_row("transverse", 0, p, 0.0, d, 0.0, 0, *mu_d,
                                                    0.0, "mu_d"));
                if (v0 <= alpha * alpha + 1e-12 && d >= d0) {
                    // 5e-12: root resolution; the true gap can sit below the
                    // double-precision resolution of mu at large d
                    if (!(*mu_d > mu - 2.1 / d && *mu_d < mu + 5e-12)) lemma_bound_ok = false;
                }
                if (*mu_d < prev) monotone_ok = false;
                prev = *mu_d;
                if (v0 > alpha * alpha && *mu_d < 0.0 && d >= d0) supercritical_ok = false;
            }
        }
    }

    // Hardy suite over a randomized smooth decaying trial family.
    bool hardy_ok = true;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> amp(-2.0, 2.0), rate(0.3, 2.5), center(0.0, 3.0);
    for (double v0 : v0_list) {
        if (v0 <= 0.0) continue;
        for (int trial = 0; trial < 200; ++trial) {
            const double a1 = amp(rng), a2 = amp(rng), a3 = amp(rng);
            const double k1 = rate(rng), k2 = rate(rng), w = rate(rng), c = center(rng);
            auto f = sample_halfline(
                [=](double x) {
                    return a1 * std::exp(-k1 * x) + a2 * std::exp(-k2 * x) +
                           a3 * std::exp(-w * (x - c) * (x - c));
                },
                [=](double x) {
                    return -a1 * k1 * std::exp(-k1 * x) - a2 * k2 * std::exp(-k2 * x) -
                           2.0 * a3 * w * (x - c) * std::exp(-w * (x - c) * (x - c));
                },
                60.0, 6001);
            const auto m = hardy_margin(f, v0);
            if (m.margin < -m.quad_error) hardy_ok = false;
        }
    }

    rep.verdicts.push_back({"neumann-box-lower-bound",
                            "mu - 2.1/d < mu_d < mu for d >= 5/alpha, V0 <= alpha^2",
                            lemma_bound_ok ? Verdict::Confirmed : Verdict::Refuted});
    rep.verdicts.push_back({"neumann-box-monotone", "mu_d nondecreasing in d",
                            monotone_ok ? Verdict::Confirmed : Verdict::Refuted});
    rep.verdicts.push_back({"supercritical-nonnegative",
                            "no negative mu_d for V0 > alpha^2 at large d",
                            supercritical_ok ? Verdict::Confirmed : Verdict::Refuted});
    rep.verdicts.push_back({"hardy-inequality", "margin >= -eps_quad on the random trial family",
                            hardy_ok ? Verdict::Confirmed : Verdict::Refuted});
    return rep;
}

} // namespace deltabias
