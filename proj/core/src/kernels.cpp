// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "skrr/kernels.hpp"

#include "skrr/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace skrr {

namespace {

void require_same_dim(Index a, Index b, const char* who) {
    if (a != b)
        throw std::invalid_argument(std::string(who) + ": dimension mismatch (" +
                                    std::to_string(a) + " vs " + std::to_string(b) + ")");
}

// W matrix of the normalized heat kernel over the bound points: pairwise
// heat weights under the ball rule, or heat weights on the symmetrized
// k-NN graph. Diagonal is 1 either way.
Matrix heat_w_matrix(const NormalizedHeatKernel& hk, const Matrix& points) {
    if (std::holds_alternative<BallRule>(hk.rule)) {
        const double tau = std::get<BallRule>(hk.rule).tau;
        const Index n = points.rows();
        Matrix w(n, n);
        for (Index i = 0; i < n; ++i) {
            w(i, i) = 1.0;
            for (Index j = i + 1; j < n; ++j) {
                const double val = heat_weight(points.row(i), points.row(j), hk.t, tau);
                w(i, j) = val;
                w(j, i) = val;
            }
        }
        return w;
    }
    const Index k = std::get<KnnRule>(hk.rule).k;
    return weight_matrix(points, knn_graph(points, k), hk.t);
}

// Query-side heat weights against the bound points. Ball rule: plain
// truncated heat weights. k-NN rule: every zero-distance point gets
// weight 1 (it plays the role the diagonal plays at bind time and does
// not consume a neighbor slot), then the k nearest positive-distance
// points get their heat weight, ties at the cutoff broken by lower index.
Vector query_heat_weights(const NormalizedHeatKernel& hk, const Matrix& points,
                          const Eigen::Ref<const Vector>& x) {
    const Index n = points.rows();
    Vector w = Vector::Zero(n);
    if (std::holds_alternative<BallRule>(hk.rule)) {
        const double tau = std::get<BallRule>(hk.rule).tau;
        for (Index i = 0; i < n; ++i)
            w[i] = heat_weight(points.row(i), x.transpose(), hk.t, tau);
        return w;
    }
    const Index k = std::get<KnnRule>(hk.rule).k;
    std::vector<std::pair<double, Index>> cand;
    cand.reserve(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        const double d_sq = (points.row(i).transpose() - x).squaredNorm();
        if (d_sq == 0.0)
            w[i] = 1.0;
        else
            cand.emplace_back(d_sq, i);
    }
    const Index take = std::min<Index>(k, static_cast<Index>(cand.size()));
    std::partial_sort(cand.begin(), cand.begin() + take, cand.end());
    for (Index t = 0; t < take; ++t) {
        const auto& [d_sq, i] = cand[static_cast<std::size_t>(t)];
        w[i] = std::exp(-d_sq / hk.t);
    }
    return w;
}

void validate_spec(const KernelSpec& spec, Index n) {
    if (std::holds_alternative<GaussianKernel>(spec)) {
        if (!(std::get<GaussianKernel>(spec).sigma > 0))
            throw std::invalid_argument("kernel: sigma must be > 0");
        return;
    }
    const auto& hk = std::get<NormalizedHeatKernel>(spec);
    if (!(hk.t > 0)) throw std::invalid_argument("kernel: temperature must be > 0");
    if (std::holds_alternative<BallRule>(hk.rule)) {
        if (!(std::get<BallRule>(hk.rule).tau > 0))
            throw std::invalid_argument("kernel: tau must be > 0");
    } else {
        const Index k = std::get<KnnRule>(hk.rule).k;
        if (k < 1) throw std::invalid_argument("kernel: k must be >= 1");
        if (n > 0 && k >= n)
            throw std::invalid_argument("kernel: k must be < n (k=" + std::to_string(k) +
                                        ", n=" + std::to_string(n) + ")");
    }
}

}  // namespace

double eval_gaussian(const Eigen::Ref<const Vector>& x, const Eigen::Ref<const Vector>& x2,
                     double sigma) {
    require_same_dim(x.size(), x2.size(), "eval_gaussian");
    if (!(sigma > 0)) throw std::invalid_argument("eval_gaussian: sigma must be > 0");
    return std::exp(-(x - x2).squaredNorm() / (sigma * sigma));
}

double heat_weight(const Eigen::Ref<const Vector>& x, const Eigen::Ref<const Vector>& x2,
                   double t, double tau) {
    require_same_dim(x.size(), x2.size(), "heat_weight");
    if (!(t > 0)) throw std::invalid_argument("heat_weight: t must be > 0");
    if (!(tau > 0)) throw std::invalid_argument("heat_weight: tau must be > 0");
    const double d_sq = (x - x2).squaredNorm();
    if (d_sq > tau * tau) return 0.0;
    return std::exp(-d_sq / t);
}

BoundKernel::BoundKernel(KernelSpec spec, Matrix points, Vector degrees)
    : spec_(std::move(spec)), points_(std::move(points)), degrees_(std::move(degrees)) {
    if (std::holds_alternative<GaussianKernel>(spec_)) {
        if (degrees_.size() != 0)
            throw std::invalid_argument("BoundKernel: Gaussian kernel carries no degrees");
    } else if (degrees_.size() != points_.rows()) {
        throw std::invalid_argument("BoundKernel: degree count does not match point count");
    }
}

BoundKernel BoundKernel::bind(const KernelSpec& spec, Matrix training_points) {
    if (training_points.rows() < 1 || training_points.cols() < 1)
        throw std::invalid_argument("BoundKernel::bind: empty training set");
    if (!training_points.allFinite())
        throw std::invalid_argument("BoundKernel::bind: training points contain non-finite entries");
    validate_spec(spec, training_points.rows());

    Vector degrees;
    if (std::holds_alternative<NormalizedHeatKernel>(spec)) {
        const auto& hk = std::get<NormalizedHeatKernel>(spec);
        const Matrix w = heat_w_matrix(hk, training_points);
        const Index n = training_points.rows();
        degrees.resize(n);
        for (Index i = 0; i < n; ++i) {
            double d = 0.0;
            for (Index j = 0; j < n; ++j) d += w(i, j);  // ascending j, same order as cross_row
            if (!(d > 0))
                throw std::runtime_error("BoundKernel::bind: zero degree at point " +
                                         std::to_string(i) + " (isolated point)");
            degrees[i] = d;
        }
    }
    return BoundKernel(spec, std::move(training_points), std::move(degrees));
}

Matrix BoundKernel::gram() const {
    const Index n = size();
    if (n < 1) throw std::invalid_argument("BoundKernel::gram: kernel has no bound points");
    Matrix k(n, n);
    if (std::holds_alternative<GaussianKernel>(spec_)) {
        const double sigma = std::get<GaussianKernel>(spec_).sigma;
        const double s_sq = sigma * sigma;
        for (Index i = 0; i < n; ++i) {
            k(i, i) = 1.0;
            for (Index j = i + 1; j < n; ++j) {
                const double val =
                    std::exp(-(points_.row(i) - points_.row(j)).squaredNorm() / s_sq);
                k(i, j) = val;
                k(j, i) = val;
            }
        }
        return k;
    }
    const auto& hk = std::get<NormalizedHeatKernel>(spec_);
    const Matrix w = heat_w_matrix(hk, points_);
    for (Index i = 0; i < n; ++i) {
        for (Index j = i; j < n; ++j) {
            const double val = w(i, j) / std::sqrt(degrees_[i] * degrees_[j]);
            k(i, j) = val;
            k(j, i) = val;
        }
    }
    return k;
}

Vector BoundKernel::cross_row(const Eigen::Ref<const Vector>& x) const {
    const Index n = size();
    if (n < 1) throw std::invalid_argument("BoundKernel::cross_row: kernel has no bound points");
    require_same_dim(x.size(), dim(), "BoundKernel::cross_row");
    if (!x.allFinite())
        throw std::invalid_argument("BoundKernel::cross_row: query point is not finite");

    if (std::holds_alternative<GaussianKernel>(spec_)) {
        const double sigma = std::get<GaussianKernel>(spec_).sigma;
        Vector v(n);
        for (Index i = 0; i < n; ++i)
            v[i] = std::exp(-(points_.row(i).transpose() - x).squaredNorm() / (sigma * sigma));
        return v;
    }

    const auto& hk = std::get<NormalizedHeatKernel>(spec_);
    const Vector w = query_heat_weights(hk, points_, x);
    double dx = 0.0;
    for (Index i = 0; i < n; ++i) dx += w[i];
    if (!(dx > 0))
        throw std::runtime_error(
            "BoundKernel::cross_row: query point has zero degree (no neighbor under the "
            "kernel's rule); projection is impossible for this point");
    Vector v(n);
    for (Index i = 0; i < n; ++i) v[i] = w[i] / std::sqrt(dx * degrees_[i]);
    return v;
}

BoundKernel BoundKernel::restrict_to(const std::vector<Index>& keep) const {
    Matrix pts(static_cast<Index>(keep.size()), dim());
    Vector deg;
    if (degrees_.size() > 0) deg.resize(static_cast<Index>(keep.size()));
    for (std::size_t r = 0; r < keep.size(); ++r) {
        const Index i = keep[r];
        if (i < 0 || i >= size())
            throw std::invalid_argument("BoundKernel::restrict_to: index out of range");
        pts.row(static_cast<Index>(r)) = points_.row(i);
        if (deg.size() > 0) deg[static_cast<Index>(r)] = degrees_[i];
    }
    return BoundKernel(spec_, std::move(pts), std::move(deg));
}

std::vector<std::pair<std::string, std::string>> kernel_spec_to_kv(const KernelSpec& spec) {
    std::vector<std::pair<std::string, std::string>> kv;
    if (std::holds_alternative<GaussianKernel>(spec)) {
        kv.emplace_back("variant", "gaussian");
        kv.emplace_back("sigma", format_real(std::get<GaussianKernel>(spec).sigma));
        return kv;
    }
    const auto& hk = std::get<NormalizedHeatKernel>(spec);
    kv.emplace_back("variant", "normalized_heat");
    kv.emplace_back("temperature", format_real(hk.t));
    if (std::holds_alternative<BallRule>(hk.rule)) {
        kv.emplace_back("rule", "ball");
        kv.emplace_back("tau", format_real(std::get<BallRule>(hk.rule).tau));
    } else {
        kv.emplace_back("rule", "knn");
        kv.emplace_back("k", std::to_string(std::get<KnnRule>(hk.rule).k));
    }
    return kv;
}

KernelSpec kernel_spec_from_kv(const std::map<std::string, std::string>& kv,
                               const std::string& context) {
    const auto get = [&](const std::string& key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end())
            throw std::runtime_error(context + ": missing kernel key '" + key + "'");
        return it->second;
    };
    const std::string& variant = get("variant");
    if (variant == "gaussian") {
        GaussianKernel g;
        g.sigma = parse_real(get("sigma"));
        validate_spec(g, 0);
        return g;
    }
    if (variant == "normalized_heat") {
        NormalizedHeatKernel hk;
        hk.t = parse_real(get("temperature"));
        const std::string& rule = get("rule");
        if (rule == "ball") {
            hk.rule = BallRule{parse_real(get("tau"))};
        } else if (rule == "knn") {
            hk.rule = KnnRule{static_cast<Index>(std::stoll(get("k")))};
        } else {
            throw std::runtime_error(context + ": unknown neighbor rule '" + rule + "'");
        }
        validate_spec(hk, 0);
        return hk;
    }
    throw std::runtime_error(context + ": unknown kernel variant '" + variant + "'");
}

}  // namespace skrr
