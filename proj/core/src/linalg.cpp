// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "skrr/linalg.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace skrr {

namespace {

void require_symmetric(const Matrix& s, const char* who) {
    if (s.rows() != s.cols())
        throw std::invalid_argument(std::string(who) + ": matrix is not square (" +
                                    std::to_string(s.rows()) + "x" + std::to_string(s.cols()) +
                                    ")");
    const double scale = s.cwiseAbs().maxCoeff();
    const double asym = (s - s.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-10 * std::max(scale, 1e-300))
        throw std::invalid_argument(std::string(who) + ": matrix is not symmetric (max |S-S^T| = " +
                                    format_real(asym) + ")");
}

// Flip eigenvector signs so the entry of largest magnitude is positive;
// ties go to the lowest index. Magnitudes within 1e-12 relative count as
// tied, so analytically symmetric vectors like (1,-1)/sqrt(2) resolve the
// same way regardless of last-bit rounding.
void fix_column_signs(Matrix& v) {
    for (Index j = 0; j < v.cols(); ++j) {
        Index best = 0;
        double mag = std::abs(v(0, j));
        for (Index i = 1; i < v.rows(); ++i) {
            const double m = std::abs(v(i, j));
            if (m > mag * (1.0 + 1e-12)) {
                mag = m;
                best = i;
            }
        }
        if (v(best, j) < 0) v.col(j) = -v.col(j);
    }
}

}  // namespace

EigenDecomposition sym_eigen(const Matrix& s, double tol) {
    require_symmetric(s, "sym_eigen");
    const Index n = s.rows();

    Eigen::SelfAdjointEigenSolver<Matrix> solver(s);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("sym_eigen: eigendecomposition failed to converge");

    EigenDecomposition out;
    out.eigenvalues = solver.eigenvalues().reverse();
    out.eigenvectors = solver.eigenvectors().rowwise().reverse();
    fix_column_signs(out.eigenvectors);

    // Contract check; full verification is O(n^3), so do it only at sizes
    // where the extra multiply is negligible. Larger cases are covered by
    // the property tests.
    if (n <= 512) {
        const double snorm = std::max(out.eigenvalues.cwiseAbs().maxCoeff(), 1e-300);
        const Matrix resid =
            s * out.eigenvectors - out.eigenvectors * out.eigenvalues.asDiagonal();
        for (Index j = 0; j < n; ++j) {
            const double bound = tol * (1.0 + std::abs(out.eigenvalues[j])) * snorm;
            if (resid.col(j).norm() > std::max(bound, 16 * tol))
                throw std::runtime_error("sym_eigen: residual exceeds tolerance for eigenpair " +
                                         std::to_string(j));
        }
        const Matrix gram = out.eigenvectors.transpose() * out.eigenvectors;
        if ((gram - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() > std::max(tol * n, 1e-12))
            throw std::runtime_error("sym_eigen: eigenvectors are not orthonormal to tolerance");
    }
    return out;
}

Matrix solve_regularized(const Matrix& k, double lambda, const Matrix& y) {
    require_symmetric(k, "solve_regularized");
    if (lambda < 0) throw std::invalid_argument("solve_regularized: lambda must be >= 0");
    if (y.rows() != k.rows())
        throw std::invalid_argument("solve_regularized: y has " + std::to_string(y.rows()) +
                                    " rows, expected " + std::to_string(k.rows()));

    Matrix a = k;
    a.diagonal().array() += lambda;

    Eigen::PartialPivLU<Matrix> lu(a);
    const Vector pivots = lu.matrixLU().diagonal().cwiseAbs();
    const double pmin = pivots.minCoeff();
    const double pmax = pivots.maxCoeff();
    const double n = static_cast<double>(k.rows());
    if (!(pmin > n * 1e-14 * std::max(pmax, 1e-300)))
        throw std::runtime_error(
            "solve_regularized: system is singular to working precision (smallest pivot = " +
            format_real(pmin) + ")");

    Matrix alpha = lu.solve(y);
    // A couple of refinement sweeps keep the residual at the contract level
    // even for ill-conditioned truncated-heat Grams.
    const double ynorm = y.norm();
    const double target = 1e-8 * ynorm;
    for (int pass = 0; pass < 3; ++pass) {
        const Matrix resid = y - a * alpha;
        if (resid.norm() <= target) return alpha;
        alpha += lu.solve(resid);
    }
    if ((y - a * alpha).norm() > target)
        throw std::runtime_error(
            "solve_regularized: residual exceeds 1e-8 * ||y|| after refinement "
            "(smallest pivot = " +
            format_real(pmin) + ")");
    return alpha;
}

double spectral_norm(const Matrix& m, double tol) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("spectral_norm: matrix is not square");
    const Index n = m.rows();
    Vector v = Vector::Ones(n) / std::sqrt(static_cast<double>(n));

    double sigma = 0.0;
    const int max_iter = 100 * static_cast<int>(n) + 200;
    for (int it = 0; it < max_iter; ++it) {
        Vector w = m * v;
        const double next = w.norm();  // v has unit norm, so this is sqrt(v^T M^T M v)
        if (next == 0.0) return 0.0;
        v = m.transpose() * w;
        const double vn = v.norm();
        if (vn == 0.0) return next;
        v /= vn;
        if (std::abs(next - sigma) <= 0.25 * tol * next) return next;
        sigma = next;
    }
    return sigma;
}

}  // namespace skrr
