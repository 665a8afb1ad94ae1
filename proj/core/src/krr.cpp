// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "skrr/krr.hpp"

#include "skrr/linalg.hpp"

#include <stdexcept>

namespace skrr {

KrrModel krr_fit(const BoundKernel& kernel, const Matrix& y, double lambda) {
    if (y.rows() != kernel.size())
        throw std::invalid_argument("krr_fit: y has " + std::to_string(y.rows()) +
                                    " rows but the kernel is bound to " +
                                    std::to_string(kernel.size()) + " points");
    if (!y.allFinite()) throw std::invalid_argument("krr_fit: y contains non-finite entries");
    if (lambda < 0) throw std::invalid_argument("krr_fit: lambda must be >= 0");

    const Matrix k = kernel.gram();
    Matrix alpha = solve_regularized(k, lambda, y);
    const double resid = (k * alpha + lambda * alpha - y).norm();
    return KrrModel{kernel, std::move(alpha), lambda, resid};
}

Vector krr_predict(const KrrModel& m, const Eigen::Ref<const Vector>& x) {
    return m.alpha_hat.transpose() * m.kernel.cross_row(x);
}

Matrix krr_predict_batch(const KrrModel& m, const Matrix& xs) {
    if (xs.rows() < 1) throw std::invalid_argument("krr_predict_batch: empty query set");
    Matrix out(xs.rows(), m.alpha_hat.cols());
    for (Index r = 0; r < xs.rows(); ++r) {
        try {
            out.row(r) = krr_predict(m, xs.row(r).transpose()).transpose();
        } catch (const std::exception& e) {
            throw std::runtime_error("krr_predict_batch: row " + std::to_string(r) + ": " +
                                     e.what());
        }
    }
    return out;
}

}  // namespace skrr
