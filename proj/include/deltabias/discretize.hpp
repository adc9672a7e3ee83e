#pragma once

// Finite-difference assembly of the generalized eigenproblem A x = lambda B x
// for (i) the partial-wave reduced form on the halfplane {r > 0} with a
// delta-halfline, and (ii) planar problems with a delta-polyline plus a
// one-sided constant bias.  The grid is chosen so the delta line passes
// exactly through nodes; the trace then stays a diagonal perturbation.

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Sparse>
#include <Eigen/Dense>

#include "deltabias/errors.hpp"
#include "deltabias/geometry.hpp"
#include "deltabias/transverse.hpp"

namespace deltabias {

// Axis-aligned tensor grid.  With `offset` set, both axes are staggered at
// half-cells: r_j = (j + 1/2) hr on (0, r_extent) and z_i = -z_extent +
// (i + 1/2) hz, so no node sits on r = 0 or on the outer box (the natural
// layout for the partial-wave form after the sqrt(2 pi r) substitution).
// Without `offset` the nodes are the interior lattice points of the box
// (-r_extent, r_extent) x (-z_extent, z_extent), including the origin.
struct Grid2D {
    double r_extent;
    double z_extent;
    int nr;
    int nz;
    bool offset = true;

    double hr() const { return offset ? r_extent / nr : 2.0 * r_extent / nr; }
    double hz() const { return 2.0 * z_extent / nz; }
    int nodes_r() const { return offset ? nr : nr - 1; }
    int nodes_z() const { return offset ? nz : nz - 1; }
    int size() const { return nodes_r() * nodes_z(); }

    double r(int j) const {
        return offset ? (j + 0.5) * hr() : -r_extent + (j + 1) * hr();
    }
    double z(int i) const {
        return offset ? -z_extent + (i + 0.5) * hz() : -z_extent + (i + 1) * hz();
    }
    int index(int j, int i) const { return i * nodes_r() + j; }
};

struct DeltaLineSpec {
    std::vector<Vec2> polyline;  // ordered vertices in the computational plane
    double alpha;                // coupling strength
};

struct BiasRegion {
    std::function<bool(const Vec2&)> contains;  // strictly inside the biased region
    std::string name;
};

// Interior of the wedge z > cot(theta) |y|; points on the boundary excluded
// (value on the measure-zero set Sigma is fixed to 0).
inline BiasRegion wedge_interior(double theta) {
    const double cot = 1.0 / std::tan(theta);
    return {[cot](const Vec2& p) { return p[1] - cot * std::abs(p[0]) > 1e-12; },
            "wedge-interior"};
}

inline BiasRegion wedge_exterior(double theta) {
    const double cot = 1.0 / std::tan(theta);
    return {[cot](const Vec2& p) { return p[1] - cot * std::abs(p[0]) < -1e-12; },
            "wedge-exterior"};
}

// Sector above/below the halfline z = r cot(theta) in the (r, z) halfplane.
inline BiasRegion sector_above(double theta) {
    const double cot = 1.0 / std::tan(theta);
    return {[cot](const Vec2& p) { return p[1] - cot * p[0] > 1e-12; }, "sector-above"};
}

inline BiasRegion sector_below(double theta) {
    const double cot = 1.0 / std::tan(theta);
    return {[cot](const Vec2& p) { return p[1] - cot * p[0] < -1e-12; }, "sector-below"};
}

inline double bias_indicator(const Vec2& point, const BiasRegion& region, double v0) {
    return region.contains(point) ? v0 : 0.0;
}

struct ProblemMeta {
    std::string kind;   // "partial-wave" | "planar"
    int m = 0;
    double theta = 0.0;
    CouplingParams params{1.0, 0.0, BiasSide::Interior};
};

struct EigenProblem {
    Eigen::SparseMatrix<double> form_matrix;  // A, symmetric
    Eigen::VectorXd weight_matrix;            // B, diagonal (cell areas)
    Grid2D grid;
    ProblemMeta meta;
};

namespace detail {

inline bool on_segment(const Vec2& p, const Vec2& a, const Vec2& b, double tol) {
    const Vec2 ab = b - a;
    const double len2 = ab.squaredNorm();
    if (len2 == 0.0) return false;
    const double t = (p - a).dot(ab) / len2;
    if (t < -tol || t > 1.0 + tol) return false;
    return (p - (a + t * ab)).norm() <= tol;
}

} // namespace detail

// Trapezoid-rule weights of the line integral over the polyline: each node on
// the polyline receives half the summed lengths of its adjacent sampled
// segments.  Non-node polyline endpoints (e.g. a ray leaving the box) drop
// their half-contribution.  Throws MisalignedDelta when a segment crosses
// grid lines between nodes.
inline std::vector<std::pair<int, double>> delta_trace_weights(const Grid2D& grid,
                                                               const DeltaLineSpec& spec) {
    const double tol = 1e-12 * std::max({grid.r_extent, grid.z_extent, 1.0});
    std::vector<double> weights(grid.size(), 0.0);
    bool any = false;

    for (std::size_t seg = 0; seg + 1 < spec.polyline.size(); ++seg) {
        const Vec2 a = spec.polyline[seg];
        const Vec2 b = spec.polyline[seg + 1];
        if ((b - a).norm() <= tol)
            throw std::invalid_argument("delta_trace_weights: degenerate polyline segment");

        // collect grid nodes lying on the segment, ordered along it
        std::vector<std::pair<double, int>> hits;  // (parameter t, node index)
        const Vec2 ab = b - a;
        for (int i = 0; i < grid.nodes_z(); ++i) {
            for (int j = 0; j < grid.nodes_r(); ++j) {
                const Vec2 p(grid.r(j), grid.z(i));
                if (detail::on_segment(p, a, b, tol))
                    hits.emplace_back((p - a).dot(ab) / ab.squaredNorm(), grid.index(j, i));
            }
        }
        std::sort(hits.begin(), hits.end());

        // The segment portion inside the node lattice must hit nodes at a
        // regular spacing (at most one diagonal cell step apart); otherwise
        // the delta line smears between nodes.
        const double len = ab.norm();
        const double max_step = std::hypot(grid.hr(), grid.hz()) + tol;
        {
            double t0 = 0.0, t1 = 1.0;  // clip to the node bounding box
            const double rmin = grid.r(0), rmax = grid.r(grid.nodes_r() - 1);
            const double zmin = grid.z(0), zmax = grid.z(grid.nodes_z() - 1);
            auto clip = [&](double p, double q, double lo, double hi) {
                if (std::abs(q) < 1e-300) return p >= lo - tol && p <= hi + tol;
                double ta = (lo - p) / q, tb = (hi - p) / q;
                if (ta > tb) std::swap(ta, tb);
                t0 = std::max(t0, ta);
                t1 = std::min(t1, tb);
                return true;
            };
            const bool inside = clip(a[0], ab[0], rmin, rmax) && clip(a[1], ab[1], zmin, zmax);
            const double len_in = inside ? std::max(0.0, t1 - t0) * len : 0.0;
            const auto expected = static_cast<std::size_t>(std::floor(len_in / max_step));
            if (hits.size() + 1 < expected)
                throw MisalignedDelta("delta_trace_weights: polyline misses grid nodes");
        }
        if (hits.empty()) continue;  // segment entirely outside the box
        for (std::size_t i = 1; i < hits.size(); ++i) {
            const double step = (hits[i].first - hits[i - 1].first) * len;
            if (step > max_step)
                throw MisalignedDelta("delta_trace_weights: polyline misses grid nodes");
        }

        // Trapezoid chain a -> hits -> b. The dangling half-weights toward the
        // segment endpoints are clamped to half a cell diagonal: one node can
        // never represent more arclength than one lattice step, and anything
        // beyond that belongs to the part of the line clipped off by the
        // Dirichlet box (e.g. a steep ray leaving through the top edge).
        for (std::size_t i = 0; i < hits.size(); ++i) {
            double w = 0.0;
            if (i > 0) w += 0.5 * (hits[i].first - hits[i - 1].first) * len;
            else if (hits[i].first > tol / len)
                w += 0.5 * std::min(max_step, hits[i].first * len);  // back to vertex a
            if (i + 1 < hits.size()) w += 0.5 * (hits[i + 1].first - hits[i].first) * len;
            else if (hits[i].first < 1.0 - tol / len)
                w += 0.5 * std::min(max_step, (1.0 - hits[i].first) * len);  // to vertex b
            weights[hits[i].second] += w;
            any = true;
        }
    }
    if (!any) throw MisalignedDelta("delta_trace_weights: no grid node lies on the polyline");

    std::vector<std::pair<int, double>> out;
    for (int i = 0; i < grid.size(); ++i)
        if (weights[i] != 0.0) out.emplace_back(i, weights[i]);
    return out;
}

namespace detail {

// Shared assembly: 5-point Laplacian stiffness (Dirichlet on the outer box,
// natural at r = 0 for staggered grids), diagonal potential, diagonal
// alpha-weighted trace.  All terms scaled by the cell area so that x' A x
// approximates the continuum quadratic form and B = (cell area) I.
inline EigenProblem assemble_core(const Grid2D& grid,
                                  const std::function<double(const Vec2&)>& potential,
                                  const std::vector<std::pair<int, double>>& trace,
                                  double alpha, const ProblemMeta& meta) {
    const double hr = grid.hr(), hz = grid.hz();
    const double area = hr * hz;
    const int nrn = grid.nodes_r(), nzn = grid.nodes_z();

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<std::size_t>(grid.size()) * 5);
    for (int i = 0; i < nzn; ++i) {
        for (int j = 0; j < nrn; ++j) {
            const int id = grid.index(j, i);
            double diag = 0.0;
            // r-direction couplings
            if (j + 1 < nrn) {
                diag += area / (hr * hr);
                trip.emplace_back(id, grid.index(j + 1, i), -area / (hr * hr));
            } else {
                diag += area / (hr * hr);  // Dirichlet ghost beyond the box
            }
            if (j > 0) {
                diag += area / (hr * hr);
                trip.emplace_back(id, grid.index(j - 1, i), -area / (hr * hr));
            } else if (!grid.offset) {
                diag += area / (hr * hr);  // Dirichlet at the left box edge
            }
            // staggered left edge (r -> 0): natural boundary, no term
            // z-direction couplings
            if (i + 1 < nzn) {
                diag += area / (hz * hz);
                trip.emplace_back(id, grid.index(j, i + 1), -area / (hz * hz));
            } else {
                diag += area / (hz * hz);
            }
            if (i > 0) {
                diag += area / (hz * hz);
                trip.emplace_back(id, grid.index(j, i - 1), -area / (hz * hz));
            } else {
                diag += area / (hz * hz);
            }
            diag += area * potential(Vec2(grid.r(j), grid.z(i)));
            trip.emplace_back(id, id, diag);
        }
    }

    EigenProblem prob;
    prob.form_matrix.resize(grid.size(), grid.size());
    prob.form_matrix.setFromTriplets(trip.begin(), trip.end());
    for (const auto& [id, w] : trace)
        prob.form_matrix.coeffRef(id, id) -= alpha * w;
    prob.form_matrix.makeCompressed();
    prob.weight_matrix = Eigen::VectorXd::Constant(grid.size(), area);
    prob.grid = grid;
    prob.meta = meta;
    return prob;
}

} // namespace detail

// Discrete centrifugal potential of the reduced radial operator.  The
// continuum term is (4m^2 - 1)/(4 r^2) = m^2/r^2 - 1/(4 r^2); discretizing
// -1/(4 r^2) by naive pointwise evaluation destroys the Hardy inequality
// (the staggered form becomes unbounded below like -c/h^2, a two-node trial
// already shows it).  Instead the -1/(4 r^2) part is realized as the exact
// discrete potential whose radial ground state is sqrt(r):
//   V_j = (Delta_h sqrt(r))_j / sqrt(r_j)
// with the natural-boundary stencil at the first staggered node.  By the
// ground-state representation the radial part stays nonnegative for m = 0,
// and V_j = -1/(4 r_j^2) + O(h^2/r^4) away from the axis.
inline double centrifugal_potential(int m, double r, double hr) {
    const double w = std::sqrt(r);
    const double lap = r > hr
        ? (std::sqrt(r + hr) - 2.0 * w + std::sqrt(r - hr)) / (hr * hr)
        : (std::sqrt(r + hr) - w) / (hr * hr);  // first node: natural boundary
    return static_cast<double>(m) * m / (r * r) + lap / w;
}

// Reduced partial-wave problem of angular momentum m on the halfplane:
// 5-point stiffness + centrifugal term consistent with (4m^2 - 1)/(4 r^2)
// + one-sided bias - alpha * (trace on the halfline z = r cot theta).
// Requires the staggered grid with hz/hr = cot(theta) so the halfline passes
// through nodes.
inline EigenProblem assemble_partial_wave(int m, const ConeSpec& spec,
                                          const CouplingParams& params, const Grid2D& grid) {
    if (!grid.offset)
        throw std::invalid_argument("assemble_partial_wave: grid must be staggered");
    if (!params.valid() || !spec.valid())
        throw std::invalid_argument("assemble_partial_wave: bad parameters");

    const double cot = 1.0 / std::tan(spec.theta);
    DeltaLineSpec line{{Vec2(0.0, 0.0), Vec2(grid.r_extent, grid.r_extent * cot)}, params.alpha};
    const auto trace = delta_trace_weights(grid, line);

    const BiasRegion region =
        params.bias_side == BiasSide::Interior ? sector_above(spec.theta) : sector_below(spec.theta);
    const double hr = grid.hr();
    auto potential = [&, m, hr](const Vec2& p) {
        return centrifugal_potential(m, p[0], hr) + bias_indicator(p, region, params.v0);
    };

    ProblemMeta meta{"partial-wave", m, spec.theta, params};
    return detail::assemble_core(grid, potential, trace, params.alpha, meta);
}

// Planar problem: 2D Laplacian + V0 on the bias region - alpha * (arclength
// trace on the polyline); B = cell-area diagonal.
inline EigenProblem assemble_planar_delta(const DeltaLineSpec& spec,
                                          const CouplingParams& params,
                                          const BiasRegion& bias_region, const Grid2D& grid) {
    if (!params.valid())
        throw std::invalid_argument("assemble_planar_delta: bad parameters");
    const auto trace = delta_trace_weights(grid, spec);

    int bias_nodes = 0;
    for (int i = 0; i < grid.nodes_z(); ++i)
        for (int j = 0; j < grid.nodes_r(); ++j)
            if (bias_region.contains(Vec2(grid.r(j), grid.z(i)))) ++bias_nodes;
    if (params.v0 > 0.0 && bias_nodes == 0)
        throw EmptyBiasRegion("assemble_planar_delta: region '" + bias_region.name +
                              "' selects no grid nodes");

    auto potential = [&](const Vec2& p) { return bias_indicator(p, bias_region, params.v0); };
    ProblemMeta meta{"planar", 0, 0.0, params};
    return detail::assemble_core(grid, potential, trace, spec.alpha, meta);
}

// Matrix-market export of the form matrix (symmetric coordinate listing,
// lower triangle) followed by the diagonal weights as an array block in a
// second stream.
inline void export_matrix_market(const Eigen::SparseMatrix<double>& A, std::ostream& os) {
    os << "%%MatrixMarket matrix coordinate real symmetric\n";
    std::size_t nnz = 0;
    for (int k = 0; k < A.outerSize(); ++k)
        for (Eigen::SparseMatrix<double>::InnerIterator it(A, k); it; ++it)
            if (it.row() >= it.col()) ++nnz;
    os << A.rows() << " " << A.cols() << " " << nnz << "\n";
    os.precision(17);
    for (int k = 0; k < A.outerSize(); ++k)
        for (Eigen::SparseMatrix<double>::InnerIterator it(A, k); it; ++it)
            if (it.row() >= it.col())
                os << it.row() + 1 << " " << it.col() + 1 << " " << it.value() << "\n";
}

inline void export_weights_market(const Eigen::VectorXd& B, std::ostream& os) {
    os << "%%MatrixMarket matrix array real general\n";
    os << B.size() << " 1\n";
    os.precision(17);
    for (Eigen::Index i = 0; i < B.size(); ++i) os << B[i] << "\n";
}

} // namespace deltabias
