// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "skrr/krr.hpp"

#include <vector>

namespace skrr {

struct SolveOptions {
    int fista_max_iter = 50000;
    double fista_rel_tol = 1e-10;  // relative objective change between iterates
    double bisect_rel_tol = 1e-4;  // on gamma, relative to the zero-solution gamma
    double sv_threshold = 1e-8;    // row-norm cutoff relative to the largest row norm
    double slack_tol = 1e-3;       // allowed overshoot on the squared discrepancy budget

    void validate() const;
};

/// Proximal map of threshold * sum_i ||row_i||_2: block soft-thresholding.
/// Row i maps to row_i * max(0, 1 - threshold / ||row_i||_2); zero rows
/// stay zero.
Matrix group_prox(const Matrix& a, double threshold);

struct FistaResult {
    Matrix alpha;
    double objective = 0;     // ||K alpha_hat - K alpha||_F^2 + gamma * sum_i ||alpha_i||
    double residual_sq = 0;   // ||K alpha_hat - K alpha||_F^2 alone
    int iterations = 0;
    bool converged = false;
};

// Minimizes ||K alpha_hat - K alpha||_F^2 + gamma sum_i ||alpha_i||_2 by
// FISTA: gradient 2 K (K (alpha - alpha_hat)), step 1/L with
// L = 2 spectral_norm(K)^2, block soft-threshold prox at gamma/L, momentum
// t_{m+1} = (1 + sqrt(1 + 4 t_m^2))/2 from t_1 = 1. Starts from zero unless
// a warm start is given. Hitting the iteration cap is flagged, not thrown;
// the result is still usable.
FistaResult fista_group_lasso(const Matrix& k, const Matrix& alpha_hat, double gamma,
                              const SolveOptions& opts = {}, const Matrix* warm_start = nullptr);

struct SparsifyResult {
    Matrix alpha_tilde;       // n x p, dense; extract_support prunes the rows
    double gamma_star = 0;    // largest penalty found feasible (1/xi at the dual optimum)
    double achieved_msd = 0;  // ||K alpha_hat - K alpha_tilde||_F^2 / n
    double dual_value = 0;    // xi [g(1/xi) - n eps^2] at gamma_star, for diagnostics
    bool converged = true;
};

// Solves the error-constrained row-sparsity program
//   min sum_i ||alpha_i||_2  s.t.  ||K alpha_hat - K alpha||_F^2 <= n eps^2
// through its scalar dual: the residual is non-decreasing in gamma, so
// bisection on gamma in [0, gamma_max] with
// gamma_max = 2 max_i ||(K^2 alpha_hat)_i||_2 (where alpha = 0 is optimal)
// finds the largest feasible gamma; inner solves are warm-started with the
// previous solution. If alpha = 0 is already feasible it is returned
// outright.
SparsifyResult sparsify(const Matrix& k, const Matrix& alpha_hat, double epsilon,
                        const SolveOptions& opts = {});

/// Interpolator restricted to its support vectors. For the normalized heat
/// kernel the stored degrees are the full-training values, frozen at bind
/// time; query-side degrees are computed against the support points (they
/// are all the model retains), which coincides with the training kernel
/// when the support is the full set.
struct SparseModel {
    BoundKernel kernel;          // restricted to the support vectors
    std::vector<Index> support;  // indices into the original training set
    Matrix alpha_tilde;          // s x p nonzero coefficient rows
    double epsilon = 0;
    double gamma_star = 0;
    double achieved_msd = 0;
    double dual_value = 0;
    bool converged = true;

    Index support_count() const { return static_cast<Index>(support.size()); }
    Index output_dim() const { return alpha_tilde.cols(); }
};

// Keeps rows with ||row||_2 > sv_threshold * max_i ||row_i||_2. An
// all-zero alpha_tilde gives an empty support model (prediction is the
// zero map).
SparseModel extract_support(const BoundKernel& kernel, const SparsifyResult& solve,
                            double epsilon, double sv_threshold);

// fit -> sparsify -> extract_support in one call.
SparseModel sparsify_model(const KrrModel& model, double epsilon, const SolveOptions& opts = {});

// f(x) = sum over support vectors of K(x, x_i) alpha_tilde_i; cost is
// proportional to the support count. Empty support returns the zero
// vector.
Vector sparse_predict(const SparseModel& m, const Eigen::Ref<const Vector>& x);

}  // namespace skrr
