// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "skrr/sparse.hpp"

#include <optional>
#include <string>
#include <vector>

namespace skrr {

struct EvalReport {
    double epsilon = 0;
    double lambda = 0;
    bool failed = false;
    std::string error;  // failure reason for a failed sweep cell
    Index sv_count = 0;
    double msd = 0;  // achieved mean squared discrepancy vs. the full KRR fit
    std::optional<double> correlation;  // |Pearson CC| vs. a reference signal
    std::optional<double> class_rate;   // nearest-neighbor classification rate
};

/// (1/n) sum_i ||a_i - b_i||_2^2 over rows.
double mean_sq_discrepancy(const Matrix& a, const Matrix& b);

// Requires length >= 2 and both arguments non-constant.
double pearson_corr(const Eigen::Ref<const Vector>& a, const Eigen::Ref<const Vector>& b);

struct NnClassification {
    std::vector<long> labels;
    std::optional<double> rate;  // fraction correct, when truth was supplied
};

// 1-nearest-neighbor labels in the embedding space; distance ties go to
// the lowest training index.
NnClassification nn_classify(const Matrix& train_embed, const std::vector<long>& train_labels,
                             const Matrix& test_embed, const std::vector<long>* truth = nullptr);

/// Everything a sweep cell needs. Optional inputs enable the optional
/// report columns: correlation needs test_points + reference_signal (and a
/// 1-D embedding); class_rate needs test_points + both label sets.
struct SweepInput {
    Matrix points;  // n x d training points
    Matrix y;       // n x p training embedding
    KernelSpec kernel;
    SolveOptions options;
    std::optional<Matrix> test_points;
    std::optional<Vector> reference_signal;  // aligned with test_points rows
    std::optional<std::vector<long>> train_labels;
    std::optional<std::vector<long>> test_labels;
};

// One report per (epsilon, lambda) pair, epsilon-major order. A failing
// cell is marked and the sweep continues. KRR fits are shared across the
// epsilon grid for each lambda.
std::vector<EvalReport> sparsity_sweep(const SweepInput& in, const std::vector<double>& epsilons,
                                       const std::vector<double>& lambdas);

// CSV with header epsilon,lambda,sv_count,msd,correlation,class_rate.
// Absent optional values are empty fields; failed cells have all four
// data fields empty.
std::string sweep_csv(const std::vector<EvalReport>& reports);

}  // namespace skrr
