// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "skrr/matio.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace skrr {

struct GaussianKernel {
    double sigma = 1.0;  // K(x,x') = exp(-||x-x'||^2 / sigma^2)
};

struct BallRule {
    double tau = 1.0;  // neighbors are points within distance tau
};

struct KnnRule {
    Index k = 1;  // neighbors are the k nearest points
};

using NeighborRule = std::variant<BallRule, KnnRule>;

/// Degree-normalized heat kernel
///   K(x,x') = W(x,x') / sqrt(sum_i W(x,x_i) * sum_j W(x',x_j)),
/// with W(x,x') = exp(-||x-x'||^2 / t) under the neighbor rule and the sums
/// taken over the bound point set.
struct NormalizedHeatKernel {
    double t = 1.0;
    NeighborRule rule;
};

using KernelSpec = std::variant<GaussianKernel, NormalizedHeatKernel>;

double eval_gaussian(const Eigen::Ref<const Vector>& x, const Eigen::Ref<const Vector>& x2,
                     double sigma);

/// exp(-||x-x2||^2 / t) if ||x-x2|| <= tau, else 0.
double heat_weight(const Eigen::Ref<const Vector>& x, const Eigen::Ref<const Vector>& x2,
                   double t, double tau);

/// A kernel spec bound to a concrete point set. For the normalized heat
/// kernel the per-point degree sums are computed once at bind time, over
/// all bound points, and frozen; queries reuse them, so evaluating
/// K(x, x_i) for a new x costs O(n) in the number of bound points.
class BoundKernel {
public:
    static BoundKernel bind(const KernelSpec& spec, Matrix training_points);

    // Reassemble from stored parts (model loading, support restriction).
    // `degrees` must be empty for the Gaussian kernel.
    BoundKernel(KernelSpec spec, Matrix points, Vector degrees);

    const KernelSpec& spec() const { return spec_; }
    const Matrix& points() const { return points_; }
    const Vector& degrees() const { return degrees_; }
    Index size() const { return points_.rows(); }
    Index dim() const { return points_.cols(); }

    /// Full Gram matrix K_ij = K(x_i, x_j); exactly symmetric by
    /// construction (upper triangle mirrored).
    Matrix gram() const;

    /// v_i = K(x, x_i) for a query point x. For the normalized heat kernel
    /// the query-side degree is computed against the bound points; a query
    /// with zero degree (no neighbor under the rule) is an error, never a
    /// silent zero row. At a bound point x = x_j this reproduces Gram row j
    /// (exactly for the ball rule; for the k-NN rule whenever the
    /// symmetrized graph adds no reverse edges at j).
    Vector cross_row(const Eigen::Ref<const Vector>& x) const;

    /// Keeps the selected rows of the point set together with their frozen
    /// full-training degree values. `keep` may be empty.
    BoundKernel restrict_to(const std::vector<Index>& keep) const;

private:
    KernelSpec spec_;
    Matrix points_;
    Vector degrees_;  // normalized heat only; empty for Gaussian
};

// Key-value text form of a kernel spec, used inside model files.
// Keys: variant, sigma | temperature, rule, tau | k.
std::vector<std::pair<std::string, std::string>> kernel_spec_to_kv(const KernelSpec& spec);
KernelSpec kernel_spec_from_kv(const std::map<std::string, std::string>& kv,
                               const std::string& context);

}  // namespace skrr
