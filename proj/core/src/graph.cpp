// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "skrr/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace skrr {

namespace {

void require_points(const Matrix& points, const char* who) {
    if (points.rows() < 1 || points.cols() < 1)
        throw std::invalid_argument(std::string(who) + ": empty point set");
    if (!points.allFinite())
        throw std::invalid_argument(std::string(who) + ": points contain non-finite entries");
}

}  // namespace

NeighborGraph knn_graph(const Matrix& points, Index k) {
    require_points(points, "knn_graph");
    const Index n = points.rows();
    if (k < 1 || k >= n)
        throw std::invalid_argument("knn_graph: k must satisfy 1 <= k < n (k=" +
                                    std::to_string(k) + ", n=" + std::to_string(n) + ")");

    NeighborGraph g;
    g.n = n;
    std::vector<std::pair<double, Index>> cand(static_cast<std::size_t>(n - 1));
    for (Index i = 0; i < n; ++i) {
        std::size_t m = 0;
        for (Index j = 0; j < n; ++j) {
            if (j == i) continue;
            cand[m++] = {(points.row(i) - points.row(j)).squaredNorm(), j};
        }
        std::partial_sort(cand.begin(), cand.begin() + k, cand.end());
        for (Index t = 0; t < k; ++t) {
            const Index j = cand[static_cast<std::size_t>(t)].second;
            g.edges.emplace_back(std::min(i, j), std::max(i, j));
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

NeighborGraph ball_graph(const Matrix& points, double tau) {
    require_points(points, "ball_graph");
    if (!(tau > 0)) throw std::invalid_argument("ball_graph: tau must be > 0");
    const Index n = points.rows();
    const double tau_sq = tau * tau;

    NeighborGraph g;
    g.n = n;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            if ((points.row(i) - points.row(j)).squaredNorm() <= tau_sq) g.edges.emplace_back(i, j);
    return g;
}

Matrix weight_matrix(const Matrix& points, const NeighborGraph& g, double t) {
    require_points(points, "weight_matrix");
    if (!(t > 0)) throw std::invalid_argument("weight_matrix: t must be > 0");
    if (g.n != points.rows())
        throw std::invalid_argument("weight_matrix: graph size does not match point count");

    Matrix w = Matrix::Identity(g.n, g.n);
    for (const auto& [i, j] : g.edges) {
        const double d_sq = (points.row(i) - points.row(j)).squaredNorm();
        const double val = std::exp(-d_sq / t);
        w(i, j) = val;
        w(j, i) = val;
    }
    return w;
}

std::vector<Index> vertex_degrees(const NeighborGraph& g) {
    std::vector<Index> deg(static_cast<std::size_t>(g.n), 0);
    for (const auto& [i, j] : g.edges) {
        ++deg[static_cast<std::size_t>(i)];
        ++deg[static_cast<std::size_t>(j)];
    }
    return deg;
}

int count_components(const NeighborGraph& g) {
    std::vector<std::vector<Index>> adj(static_cast<std::size_t>(g.n));
    for (const auto& [i, j] : g.edges) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
    }
    std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
    std::vector<Index> stack;
    int components = 0;
    for (Index s = 0; s < g.n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++components;
        stack.push_back(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            const Index u = stack.back();
            stack.pop_back();
            for (Index v : adj[static_cast<std::size_t>(u)]) {
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    stack.push_back(v);
                }
            }
        }
    }
    return components;
}

}  // namespace skrr
