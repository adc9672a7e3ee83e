#pragma once

// Lowest eigenpairs of the sparse symmetric generalized problem
// A x = lambda B x with diagonal positive B.  Strategy: rescale to the
// standard symmetric form C = B^{-1/2} A B^{-1/2}, place a shift strictly
// below the spectrum (certified by LDL^T inertia), and run shift-invert
// Lanczos with full reorthogonalization.  A dense solver doubles as the
// brute-force oracle on small problems.

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "deltabias/discretize.hpp"
#include "deltabias/errors.hpp"

namespace deltabias {

struct EigResult {
    Eigen::VectorXd values;     // ascending
    Eigen::MatrixXd vectors;    // B-orthonormal columns
    Eigen::VectorXd residuals;  // ||A x - lambda B x|| / ||B x||
    int iterations = 0;         // total Lanczos steps across restarts
};

struct SolveOpts {
    std::optional<double> shift;  // initial shift; default derived from the matrix
    int max_lanczos = 400;        // Krylov dimension cap per pass
    int max_restarts = 500;       // pass cap; converts hangs into errors
    unsigned seed = 7;
};

namespace detail {

// Number of eigenvalues of C below sigma, via the inertia of the LDL^T
// factorization of A - sigma B (congruent to C - sigma I).
struct ShiftedFactor {
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt;
    int negatives = -1;  // -1: factorization failed

    ShiftedFactor(const Eigen::SparseMatrix<double>& A, const Eigen::VectorXd& B, double sigma) {
        Eigen::SparseMatrix<double> S = A;
        for (int i = 0; i < S.rows(); ++i) S.coeffRef(i, i) -= sigma * B[i];
        ldlt.compute(S);
        if (ldlt.info() != Eigen::Success) return;
        negatives = 0;
        const auto& d = ldlt.vectorD();
        for (Eigen::Index i = 0; i < d.size(); ++i)
            if (d[i] < 0.0) ++negatives;
    }
};

} // namespace detail

inline EigResult lowest_eigenpairs(const EigenProblem& problem, int k, double tol = 1e-9,
                                   const SolveOpts& opts = {}) {
    const auto& A = problem.form_matrix;
    const auto& B = problem.weight_matrix;
    const int n = static_cast<int>(A.rows());
    if (k < 1 || k > n) throw std::invalid_argument("lowest_eigenpairs: bad k");

    const Eigen::VectorXd sqrtB = B.array().sqrt();
    const Eigen::VectorXd isqrtB = sqrtB.cwiseInverse();

    // Gershgorin lower bound of C = B^{-1/2} A B^{-1/2} (used only as a
    // fallback floor for the shift search).
    double gersh = 0.0;
    {
        Eigen::VectorXd diag(n), offsum = Eigen::VectorXd::Zero(n);
        diag.setZero();
        for (int col = 0; col < A.outerSize(); ++col)
            for (Eigen::SparseMatrix<double>::InnerIterator it(A, col); it; ++it) {
                const double c = it.value() * isqrtB[it.row()] * isqrtB[it.col()];
                if (it.row() == it.col()) diag[it.row()] = c;
                else offsum[it.row()] += std::abs(c);
            }
        gersh = (diag - offsum).minCoeff();
    }

    // Place the shift certifiably below the whole spectrum.
    double sigma = opts.shift.value_or(std::min(-0.1, gersh * 0.05));
    std::unique_ptr<detail::ShiftedFactor> fac;
    {
        double step = std::max(0.5, 0.25 * std::abs(sigma));
        for (int tries = 0;; ++tries) {
            fac = std::make_unique<detail::ShiftedFactor>(A, B, sigma);
            if (fac->negatives == 0) break;
            if (tries > 60 || sigma < 2.0 * gersh - 1.0)
                throw ConvergenceFailure("lowest_eigenpairs: shift search failed");
            sigma -= step;
            step *= 2.0;
        }
    }

    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> gauss;

    EigResult result;
    int total_steps = 0;
    double best_residual = std::numeric_limits<double>::infinity();
    double lowest_estimate = std::numeric_limits<double>::quiet_NaN();

    for (int restart = 0; restart < opts.max_restarts; ++restart) {
        // Shift-invert Lanczos on S = (C - sigma I)^{-1}, full reorthogonalization.
        const int m_cap = std::min<int>(n, opts.max_lanczos + 50 * restart);
        std::vector<Eigen::VectorXd> basis;
        std::vector<double> alpha_c, beta_c;
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v[i] = gauss(rng);
        v.normalize();
        basis.push_back(v);

        auto apply = [&](const Eigen::VectorXd& y) -> Eigen::VectorXd {
            // (C - sigma)^{-1} y = B^{1/2} (A - sigma B)^{-1} B^{1/2} y
            Eigen::VectorXd w = sqrtB.cwiseProduct(y);
            w = fac->ldlt.solve(w);
            return sqrtB.cwiseProduct(w);
        };

        bool done = false;
        for (int j = 0; j < m_cap && !done; ++j) {
            Eigen::VectorXd w = apply(basis[j]);
            const double a = basis[j].dot(w);
            alpha_c.push_back(a);
            w -= a * basis[j];
            if (j > 0) w -= beta_c[j - 1] * basis[j - 1];
            for (const auto& q : basis) w -= q.dot(w) * q;  // full reorth
            for (const auto& q : basis) w -= q.dot(w) * q;
            const double b = w.norm();
            ++total_steps;

            const int steps = j + 1;
            const bool room = steps < m_cap && b > 1e-14;
            // check convergence every few steps once the subspace can hold k pairs
            if (steps >= std::min(n, 2 * k + 2) && (steps % 5 == 0 || !room)) {
                Eigen::MatrixXd T = Eigen::MatrixXd::Zero(steps, steps);
                for (int i = 0; i < steps; ++i) T(i, i) = alpha_c[i];
                for (int i = 0; i + 1 < steps; ++i) T(i, i + 1) = T(i + 1, i) = beta_c[i];
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);

                // largest theta of S correspond to lowest lambda of C
                std::vector<int> order(steps);
                for (int i = 0; i < steps; ++i) order[i] = i;
                std::sort(order.begin(), order.end(), [&](int x, int y) {
                    return es.eigenvalues()[x] > es.eigenvalues()[y];
                });

                const int kk = std::min(k, steps);
                Eigen::VectorXd vals(kk), res(kk);
                Eigen::MatrixXd vecs(n, kk);
                for (int t = 0; t < kk; ++t) {
                    const double theta = es.eigenvalues()[order[t]];
                    vals[t] = sigma + 1.0 / theta;
                    Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
                    for (int i = 0; i < steps; ++i) y += es.eigenvectors()(i, order[t]) * basis[i];
                    y.normalize();
                    Eigen::VectorXd x = isqrtB.cwiseProduct(y);
                    Eigen::VectorXd Bx = B.cwiseProduct(x);
                    res[t] = (A * x - vals[t] * Bx).norm() / Bx.norm();
                    vecs.col(t) = x;
                }
                const double worst = res.maxCoeff();
                best_residual = std::min(best_residual, worst);
                lowest_estimate = vals[0];
                if (worst <= tol || kk == n) {
                    result.values = vals;
                    result.vectors = vecs;
                    result.residuals = res;
                    result.iterations = total_steps;
                    done = true;
                    break;
                }
                if (!room) break;
            }
            if (b <= 1e-14) break;  // invariant subspace
            beta_c.push_back(b);
            basis.push_back(w / b);
        }
        if (done) return result;

        // Not converged in this pass: move the shift just below the current
        // lowest Ritz estimate (keeping the inertia certificate) and refactor.
        if (std::isfinite(lowest_estimate)) {
            double cand = lowest_estimate - 0.1 * std::max(std::abs(lowest_estimate), 0.1);
            for (int tries = 0; cand > 2.0 * gersh - 1.0; ++tries) {
                auto f = std::make_unique<detail::ShiftedFactor>(A, B, cand);
                if (f->negatives == 0) {
                    sigma = cand;
                    fac = std::move(f);
                    break;
                }
                cand -= std::max(0.5, std::abs(cand)) * (1 << tries);
                if (tries > 40) break;
            }
        }
    }
    throw NoConvergence(opts.max_restarts, best_residual);
}

// Full ascending generalized spectrum via a dense symmetric solver; the
// brute-force oracle for the iterative path.  Guarded against large inputs.
inline Eigen::VectorXd dense_oracle(const EigenProblem& problem) {
    const int n = static_cast<int>(problem.form_matrix.rows());
    if (n > 4000) throw TooLarge("dense_oracle: dimension " + std::to_string(n) + " > 4000");
    Eigen::MatrixXd A = Eigen::MatrixXd(problem.form_matrix);
    Eigen::MatrixXd B = problem.weight_matrix.asDiagonal();
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(A, B, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

enum class SpectralTag { Discrete, EssentialEdgeArtifact };

struct SpectralClassification {
    std::vector<SpectralTag> tags;     // per eigenvalue of the largest box
    std::vector<double> values;        // eigenvalues on the largest box
    std::vector<double> box_sizes;
    std::vector<double> drift;         // |change| per box step, largest two boxes
    double stability_threshold;
    double margin;
};

struct ClassifyOpts {
    std::optional<double> stability_threshold;  // default 1e-3 * max(|mu|, 0.1)
    std::optional<double> margin;               // default = stability threshold
    double tol = 1e-8;
    SolveOpts solve;
};

// Separates discrete eigenvalues from discretized-continuum artifacts: a
// value is Discrete when it is stable under box doubling and sits below the
// essential threshold by more than the margin.
inline SpectralClassification classify_spectrum(const std::vector<EigenProblem>& ladder,
                                                double mu, int k,
                                                const ClassifyOpts& opts = {}) {
    if (ladder.size() < 3)
        throw InsufficientLadder("classify_spectrum: need at least 3 box sizes");

    SpectralClassification cls;
    cls.stability_threshold =
        opts.stability_threshold.value_or(1e-3 * std::max(std::abs(mu), 0.1));
    cls.margin = opts.margin.value_or(cls.stability_threshold);

    std::vector<Eigen::VectorXd> vals;
    for (const auto& prob : ladder) {
        vals.push_back(lowest_eigenpairs(prob, k, opts.tol, opts.solve).values);
        cls.box_sizes.push_back(2.0 * prob.grid.z_extent);
    }
    const auto& last = vals.back();
    const auto& prev = vals[vals.size() - 2];
    for (int i = 0; i < k; ++i) {
        const double d = std::abs(last[i] - prev[i]);
        cls.values.push_back(last[i]);
        cls.drift.push_back(d);
        const bool discrete = d < cls.stability_threshold && last[i] < mu - cls.margin;
        cls.tags.push_back(discrete ? SpectralTag::Discrete : SpectralTag::EssentialEdgeArtifact);
    }
    return cls;
}

} // namespace deltabias
