// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "skrr/matio.hpp"

#include <utility>
#include <vector>

namespace skrr {

/// Undirected neighbor graph over point indices. Edges are stored as
/// (i, j) pairs with i < j, sorted lexicographically; no self loops.
struct NeighborGraph {
    Index n = 0;
    std::vector<std::pair<Index, Index>> edges;
};

// Union-symmetrized k-nearest-neighbor graph: (i,j) is an edge iff j is
// among i's k nearest or i is among j's k nearest (Euclidean distance,
// ties broken by lower index). Requires 1 <= k < n.
NeighborGraph knn_graph(const Matrix& points, Index k);

// Edge iff pairwise distance <= tau. Requires tau > 0.
NeighborGraph ball_graph(const Matrix& points, double tau);

// Heat weights on the graph: W_ij = exp(-dist^2 / t) on edges, 0 off
// edges, and W_ii = 1 on the diagonal. Requires t > 0.
Matrix weight_matrix(const Matrix& points, const NeighborGraph& g, double t);

int count_components(const NeighborGraph& g);
std::vector<Index> vertex_degrees(const NeighborGraph& g);

}  // namespace skrr
