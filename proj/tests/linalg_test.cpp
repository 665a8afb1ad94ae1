// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "skrr/linalg.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace skrr;
using namespace testsup;

TEST_CASE("sym_eigen on the identity") {
    const EigenDecomposition e = sym_eigen(Matrix::Identity(3, 3));
    for (Index j = 0; j < 3; ++j) CHECK(e.eigenvalues[j] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sym_eigen on diag(3,1) fixes signs to +e1, +e2") {
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 3;
    d(1, 1) = 1;
    const EigenDecomposition e = sym_eigen(d);
    CHECK(e.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(e.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e.eigenvectors(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e.eigenvectors(1, 0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(e.eigenvectors(1, 1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sym_eigen on [[2,1],[1,2]]: hand-diagonalized 2x2") {
    Matrix s(2, 2);
    s << 2, 1, 1, 2;
    const EigenDecomposition e = sym_eigen(s);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(e.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(e.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
    // (1,1)/sqrt(2); the tie in magnitudes resolves to a positive first entry
    CHECK(e.eigenvectors(0, 0) == doctest::Approx(inv_sqrt2).epsilon(1e-12));
    CHECK(e.eigenvectors(1, 0) == doctest::Approx(inv_sqrt2).epsilon(1e-12));
    // (1,-1)/sqrt(2) under the same convention
    CHECK(e.eigenvectors(0, 1) == doctest::Approx(inv_sqrt2).epsilon(1e-12));
    CHECK(e.eigenvectors(1, 1) == doctest::Approx(-inv_sqrt2).epsilon(1e-12));
}

TEST_CASE("sym_eigen rejects non-square and asymmetric input") {
    CHECK_THROWS_AS((void)sym_eigen(Matrix::Zero(2, 3)), std::invalid_argument);
    Matrix a(2, 2);
    a << 1, 2, 0, 1;
    CHECK_THROWS_AS((void)sym_eigen(a), std::invalid_argument);
}

TEST_CASE("sym_eigen reconstruction property on random symmetric matrices") {
    Lcg64 rng(7);
    for (Index n : {2, 5, 10, 25, 50}) {
        const Matrix s = rand_symmetric(rng, n, 2.0);
        const EigenDecomposition e = sym_eigen(s);
        const Matrix rebuilt =
            e.eigenvectors * e.eigenvalues.asDiagonal() * e.eigenvectors.transpose();
        const double snorm = e.eigenvalues.cwiseAbs().maxCoeff();
        CHECK((rebuilt - s).norm() <= static_cast<double>(n) * 1e-10 * std::max(snorm, 1.0));
        for (Index j = 1; j < n; ++j) CHECK(e.eigenvalues[j - 1] >= e.eigenvalues[j]);
    }
}

TEST_CASE("sym_eigen output is deterministic") {
    Lcg64 rng(11);
    const Matrix s = rand_symmetric(rng, 20);
    const EigenDecomposition a = sym_eigen(s);
    const EigenDecomposition b = sym_eigen(s);
    CHECK(a.eigenvalues == b.eigenvalues);
    CHECK(a.eigenvectors == b.eigenvectors);
}

TEST_CASE("solve_regularized identity and hand-solved cases") {
    Lcg64 rng(3);
    const Matrix y = rand_matrix(rng, 2, 3);
    const Matrix a = solve_regularized(Matrix::Identity(2, 2), 0.0, y);
    CHECK((a - y).norm() <= 1e-12 * y.norm());

    Matrix k = Matrix::Zero(2, 2);
    k(0, 0) = 2;
    k(1, 1) = 2;
    Matrix rhs(2, 1);
    rhs << 3, 6;
    const Matrix alpha = solve_regularized(k, 1.0, rhs);  // (2+1) alpha = y
    CHECK(alpha(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(alpha(1, 0) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("solve_regularized reports singular systems with the smallest pivot") {
    const Matrix k = Matrix::Zero(2, 2);
    Matrix y(2, 1);
    y << 1, 1;
    const auto msg =
        thrown_message<std::runtime_error>([&] { (void)solve_regularized(k, 0.0, y); });
    CHECK(msg.find("singular") != std::string::npos);
    CHECK(msg.find("pivot") != std::string::npos);
}

TEST_CASE("solve_regularized meets the residual contract on random SPD systems") {
    Lcg64 rng(19);
    for (int rep = 0; rep < 5; ++rep) {
        const Index n = 20;
        Vector eigs(n);
        for (Index i = 0; i < n; ++i) eigs[i] = rng.next_in(0.5, 4.0);
        const Matrix k = sym_with_spectrum(rng, eigs);
        const Matrix y = rand_matrix(rng, n, 3);
        const double lambda = rng.next_in(0.0, 1.0);
        const Matrix alpha = solve_regularized(k, lambda, y);
        Matrix a = k;
        a.diagonal().array() += lambda;
        CHECK((a * alpha - y).norm() <= 1e-8 * y.norm());
    }
}

TEST_CASE("solve_regularized agrees with the eigendecomposition route") {
    // Dual-route check: the solver is LU-based, the oracle goes through
    // sym_eigen, so agreement validates both.
    Lcg64 rng(23);
    const Index n = 15;
    Vector eigs(n);
    for (Index i = 0; i < n; ++i) eigs[i] = rng.next_in(0.3, 3.0);
    const Matrix k = sym_with_spectrum(rng, eigs);
    const Matrix y = rand_matrix(rng, n, 2);
    const double lambda = 0.4;

    const Matrix direct = solve_regularized(k, lambda, y);
    const EigenDecomposition e = sym_eigen(k);
    const Vector shifted = e.eigenvalues.array() + lambda;
    const Matrix via_eigen = e.eigenvectors * shifted.cwiseInverse().asDiagonal() *
                             e.eigenvectors.transpose() * y;
    CHECK((direct - via_eigen).norm() <= 1e-6 * via_eigen.norm());
}

TEST_CASE("solve_regularized handles symmetric indefinite systems") {
    Lcg64 rng(29);
    Vector eigs(6);
    eigs << 2.0, 1.5, 1.0, -0.8, -1.2, -2.5;  // indefinite, nonsingular
    const Matrix k = sym_with_spectrum(rng, eigs);
    const Matrix y = rand_matrix(rng, 6, 2);
    const Matrix alpha = solve_regularized(k, 0.0, y);
    CHECK((k * alpha - y).norm() <= 1e-8 * y.norm());
}

TEST_CASE("spectral_norm basics") {
    CHECK(spectral_norm(Matrix::Identity(4, 4)) == doctest::Approx(1.0).epsilon(1e-9));
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 5;
    d(1, 1) = 2;
    CHECK(spectral_norm(d) == doctest::Approx(5.0).epsilon(1e-9));
    Matrix off(2, 2);
    off << 0, 3, 3, 0;  // eigenvalues +-3
    CHECK(spectral_norm(off) == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(spectral_norm(Matrix::Zero(3, 3)) == 0.0);
    CHECK_THROWS_AS((void)spectral_norm(Matrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("spectral_norm matches the largest |eigenvalue| from sym_eigen") {
    Lcg64 rng(31);
    for (int rep = 0; rep < 5; ++rep) {
        const Matrix s = rand_symmetric(rng, 12);
        const EigenDecomposition e = sym_eigen(s);
        const double want = e.eigenvalues.cwiseAbs().maxCoeff();
        CHECK(spectral_norm(s, 1e-10) == doctest::Approx(want).epsilon(1e-6));
    }
}

TEST_CASE("spectral_norm is deterministic") {
    Lcg64 rng(37);
    const Matrix m = rand_matrix(rng, 9, 9);
    CHECK(spectral_norm(m) == spectral_norm(m));
}
