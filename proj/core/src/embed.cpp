// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "skrr/embed.hpp"

#include "skrr/graph.hpp"
#include "skrr/krr.hpp"
#include "skrr/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace skrr {

namespace {

constexpr double kEigenvalueFloor = 1e-12;

}  // namespace

SpectralEmbedding laplacian_eigenmaps(const Matrix& points, const KernelSpec& spec, Index p,
                                      double eig_tol) {
    if (!std::holds_alternative<NormalizedHeatKernel>(spec))
        throw std::invalid_argument(
            "laplacian_eigenmaps: embedding requires the normalized heat kernel");
    if (p < 1) throw std::invalid_argument("laplacian_eigenmaps: p must be >= 1");
    if (p + 1 > points.rows())
        throw std::invalid_argument("laplacian_eigenmaps: need at least p+1 training points (p=" +
                                    std::to_string(p) + ", n=" + std::to_string(points.rows()) +
                                    ")");

    const auto& hk = std::get<NormalizedHeatKernel>(spec);
    NeighborGraph g = std::holds_alternative<BallRule>(hk.rule)
                          ? ball_graph(points, std::get<BallRule>(hk.rule).tau)
                          : knn_graph(points, std::get<KnnRule>(hk.rule).k);
    const auto degs = vertex_degrees(g);
    for (std::size_t i = 0; i < degs.size(); ++i)
        if (degs[i] == 0)
            throw std::runtime_error("laplacian_eigenmaps: point " + std::to_string(i) +
                                     " is isolated under the neighbor rule");

    BoundKernel kernel = BoundKernel::bind(spec, points);
    const EigenDecomposition eig = sym_eigen(kernel.gram(), eig_tol);

    SpectralEmbedding emb{Matrix(points.rows(), p), Vector(p), std::move(kernel), true,
                          count_components(g)};
    for (Index j = 0; j < p; ++j) {
        const double lambda = eig.eigenvalues[j + 1];  // skip the top (trivial) eigenvector
        if (std::abs(lambda) < kEigenvalueFloor)
            throw std::runtime_error("laplacian_eigenmaps: retained eigenvalue " +
                                     std::to_string(j + 1) + " is below 1e-12 in magnitude (" +
                                     format_real(lambda) + ")");
        emb.eigenvalues[j] = lambda;
        emb.coordinates.col(j) = eig.eigenvectors.col(j + 1);
    }
    return emb;
}

Vector nystrom_extend(const SpectralEmbedding& emb, const Eigen::Ref<const Vector>& x) {
    const Index p = emb.coordinates.cols();
    for (Index j = 0; j < p; ++j)
        if (std::abs(emb.eigenvalues[j]) < kEigenvalueFloor)
            throw std::runtime_error("nystrom_extend: eigenvalue " + std::to_string(j) +
                                     " is below 1e-12 in magnitude");
    const Vector krow = emb.kernel.cross_row(x);
    Vector out(p);
    for (Index j = 0; j < p; ++j)
        out[j] = krow.dot(emb.coordinates.col(j)) / emb.eigenvalues[j];
    return out;
}

double krr_matches_nystrom(const SpectralEmbedding& emb, const Matrix& xs) {
    const KrrModel model = krr_fit(emb.kernel, emb.coordinates, 0.0);
    double worst = 0.0;
    for (Index r = 0; r < xs.rows(); ++r) {
        const Vector via_krr = krr_predict(model, xs.row(r).transpose());
        const Vector via_nystrom = nystrom_extend(emb, xs.row(r).transpose());
        worst = std::max(worst, (via_krr - via_nystrom).norm());
    }
    return worst;
}

}  // namespace skrr
