// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "skrr/kernels.hpp"

namespace skrr {

/// Spectral embedding of a training set: p retained unit-norm eigenvectors
/// of the kernel Gram matrix (one coordinate per column), the matching
/// eigenvalues, and the bound kernel used to build the Gram matrix.
/// `skip_trivial` records that the top eigenvector (the constant direction
/// of the normalized kernel) was dropped.
struct SpectralEmbedding {
    Matrix coordinates;   // n x p
    Vector eigenvalues;   // p retained eigenvalues, descending
    BoundKernel kernel;
    bool skip_trivial = true;
    int graph_components = 1;  // diagnostic; >1 means indicator-vector artifacts
};

// Laplacian-eigenmaps training embedding with the degree-normalized heat
// kernel. Returns eigenvectors 2..p+1 of the Gram matrix (descending
// order, the top one skipped). Errors on isolated points and on retained
// eigenvalues below 1e-12 in magnitude.
SpectralEmbedding laplacian_eigenmaps(const Matrix& points, const KernelSpec& spec, Index p,
                                      double eig_tol = 1e-10);

// Out-of-sample extension for one query point:
//   f_j(x) = (1/lambda_j) sum_i phi_i^(j) K(x, x_i).
Vector nystrom_extend(const SpectralEmbedding& emb, const Eigen::Ref<const Vector>& x);

// Fits kernel ridge regression with lambda = 0 and Y = emb.coordinates and
// returns the maximum over rows of xs of the Euclidean distance between
// the KRR prediction and the Nystrom extension. For a well-conditioned
// Gram matrix the two coincide (the lambda = 0 identity).
double krr_matches_nystrom(const SpectralEmbedding& emb, const Matrix& xs);

}  // namespace skrr
