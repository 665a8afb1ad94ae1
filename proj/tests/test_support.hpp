// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "skrr/matio.hpp"
#include "skrr/rng.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

namespace testsup {

using skrr::Index;
using skrr::Matrix;
using skrr::Vector;

inline Matrix rand_matrix(skrr::Lcg64& rng, Index rows, Index cols, double lo = -1.0,
                          double hi = 1.0) {
    Matrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = rng.next_in(lo, hi);
    return m;
}

inline Matrix rand_orthogonal(skrr::Lcg64& rng, Index n) {
    const Matrix a = rand_matrix(rng, n, n);
    Eigen::HouseholderQR<Matrix> qr(a);
    return Matrix(qr.householderQ());
}

/// Symmetric matrix with a prescribed spectrum (random orthogonal basis).
inline Matrix sym_with_spectrum(skrr::Lcg64& rng, const Vector& eigs) {
    const Matrix q = rand_orthogonal(rng, eigs.size());
    return q * eigs.asDiagonal() * q.transpose();
}

inline Matrix rand_symmetric(skrr::Lcg64& rng, Index n, double scale = 1.0) {
    const Matrix a = rand_matrix(rng, n, n, -scale, scale);
    return 0.5 * (a + a.transpose());
}

// Exact cyclic block-coordinate descent for
//   F(alpha) = ||K alpha_hat - K alpha||_F^2 + gamma sum_i ||alpha_i||_2.
// The per-row minimizer has a closed form, so this is an independent
// oracle for the FISTA path: no gradient step, no momentum, no Lipschitz
// constant.
inline double group_lasso_bcd_oracle(const Matrix& k, const Matrix& alpha_hat, double gamma,
                                     int max_sweeps = 50000) {
    const Index n = k.rows();
    const Index p = alpha_hat.cols();
    const Matrix b = k * alpha_hat;
    Matrix alpha = Matrix::Zero(n, p);
    Matrix resid = -b;  // K alpha - b
    double prev = std::numeric_limits<double>::infinity();
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        for (Index i = 0; i < n; ++i) {
            const Vector ki = k.col(i);
            const double a = ki.squaredNorm();
            if (a == 0.0) continue;
            resid.noalias() -= ki * alpha.row(i);
            const Vector c = resid.transpose() * ki;
            const double cn = c.norm();
            if (2.0 * cn > gamma)
                alpha.row(i) = (-((2.0 * cn - gamma) / (2.0 * a * cn)) * c).transpose();
            else
                alpha.row(i).setZero();
            resid.noalias() += ki * alpha.row(i);
        }
        double f = resid.squaredNorm();
        for (Index i = 0; i < n; ++i) f += gamma * alpha.row(i).norm();
        if (std::abs(prev - f) <= 1e-14 * std::max(1.0, std::abs(f))) return f;
        prev = f;
    }
    return prev;
}

/// Spearman rank correlation between two value vectors.
inline double spearman(const std::vector<double>& a, const std::vector<double>& b) {
    const auto ranks = [](const std::vector<double>& v) {
        std::vector<std::size_t> order(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t x, std::size_t y) { return v[x] < v[y]; });
        std::vector<double> r(v.size());
        for (std::size_t i = 0; i < order.size(); ++i) r[order[i]] = static_cast<double>(i);
        return r;
    };
    const auto ra = ranks(a);
    const auto rb = ranks(b);
    const double n = static_cast<double>(a.size());
    double ma = 0, mb = 0;
    for (std::size_t i = 0; i < ra.size(); ++i) {
        ma += ra[i];
        mb += rb[i];
    }
    ma /= n;
    mb /= n;
    double cov = 0, va = 0, vb = 0;
    for (std::size_t i = 0; i < ra.size(); ++i) {
        cov += (ra[i] - ma) * (rb[i] - mb);
        va += (ra[i] - ma) * (ra[i] - ma);
        vb += (rb[i] - mb) * (rb[i] - mb);
    }
    return cov / std::sqrt(va * vb);
}

/// Scratch directory under the system temp dir, removed on destruction.
struct TempDir {
    std::filesystem::path dir;

    explicit TempDir(const std::string& tag) {
        dir = std::filesystem::temp_directory_path() / ("skrr_" + tag);
        std::filesystem::remove_all(dir);
        std::filesystem::create_directories(dir);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(dir, ec);
    }
    std::filesystem::path operator/(const std::string& name) const { return dir / name; }
};

inline void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

template <class E, class F>
std::string thrown_message(F&& f) {
    try {
        f();
    } catch (const E& e) {
        return e.what();
    }
    return {};
}

}  // namespace testsup
