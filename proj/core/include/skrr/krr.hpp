// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "skrr/kernels.hpp"

namespace skrr {

/// Fitted kernel ridge regression: prediction is
///   f(x) = sum_i K(x, x_i) alpha_hat_i
/// over all n training points, with alpha_hat = (K + lambda I)^-1 Y.
struct KrrModel {
    BoundKernel kernel;
    Matrix alpha_hat;         // n x p
    double lambda = 0.0;
    double fit_residual = 0;  // ||(K + lambda I) alpha_hat - Y||_F at fit time
};

// lambda = 0 is allowed and goes through the same regularized solver with
// its singularity check (the Nystrom case needs it).
KrrModel krr_fit(const BoundKernel& kernel, const Matrix& y, double lambda);

Vector krr_predict(const KrrModel& m, const Eigen::Ref<const Vector>& x);

// Row i of the result is krr_predict on row i of xs; failures carry the
// row index.
Matrix krr_predict_batch(const KrrModel& m, const Matrix& xs);

}  // namespace skrr
