// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "skrr/matio.hpp"

namespace skrr {

/// Full symmetric eigendecomposition, eigenvalues sorted descending.
/// Column j of `eigenvectors` pairs with `eigenvalues[j]`, has unit norm,
/// and carries a fixed sign: its entry of largest magnitude is positive
/// (ties broken by lowest row index). Identical input gives identical
/// output, which the golden-file tests rely on.
struct EigenDecomposition {
    Vector eigenvalues;
    Matrix eigenvectors;
};

// `s` must be square and symmetric within 1e-10 relative; `tol` is the
// acceptance tolerance for the residual/orthogonality contract.
EigenDecomposition sym_eigen(const Matrix& s, double tol = 1e-10);

// Solves (k + lambda I) alpha = y by factorization without forming the
// inverse. k only needs to be symmetric; k + lambda I must be nonsingular
// to working precision, otherwise the error reports the smallest pivot.
// Postcondition: ||(k+lambda I) alpha - y||_F <= 1e-8 ||y||_F.
Matrix solve_regularized(const Matrix& k, double lambda, const Matrix& y);

// Largest singular value via power iteration on m^T m with a fixed
// all-ones start vector, so the result is deterministic.
double spectral_norm(const Matrix& m, double tol = 1e-10);

}  // namespace skrr
