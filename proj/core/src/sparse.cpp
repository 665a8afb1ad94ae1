// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "skrr/sparse.hpp"

#include "skrr/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace skrr {

namespace {

double row_norm_sum(const Matrix& a) {
    double s = 0.0;
    for (Index i = 0; i < a.rows(); ++i) s += a.row(i).norm();
    return s;
}

void group_prox_inplace(Matrix& a, double threshold) {
    if (threshold == 0.0) return;
    for (Index i = 0; i < a.rows(); ++i) {
        const double norm = a.row(i).norm();
        if (norm <= threshold)
            a.row(i).setZero();
        else
            a.row(i) *= 1.0 - threshold / norm;
    }
}

void check_fista_inputs(const Matrix& k, const Matrix& alpha_hat, double gamma,
                        const SolveOptions& opts) {
    opts.validate();
    if (k.rows() != k.cols()) throw std::invalid_argument("fista_group_lasso: K must be square");
    if (alpha_hat.rows() != k.rows())
        throw std::invalid_argument("fista_group_lasso: alpha_hat has " +
                                    std::to_string(alpha_hat.rows()) + " rows, expected " +
                                    std::to_string(k.rows()));
    if (gamma < 0) throw std::invalid_argument("fista_group_lasso: gamma must be >= 0");
}

}  // namespace

void SolveOptions::validate() const {
    if (fista_max_iter <= 0 || !(fista_rel_tol > 0) || !(bisect_rel_tol > 0) ||
        !(sv_threshold > 0) || !(slack_tol > 0))
        throw std::invalid_argument("SolveOptions: all options must be positive");
}

Matrix group_prox(const Matrix& a, double threshold) {
    if (threshold < 0) throw std::invalid_argument("group_prox: threshold must be >= 0");
    Matrix out = a;
    group_prox_inplace(out, threshold);
    return out;
}

FistaResult fista_group_lasso(const Matrix& k, const Matrix& alpha_hat, double gamma,
                              const SolveOptions& opts, const Matrix* warm_start) {
    check_fista_inputs(k, alpha_hat, gamma, opts);
    const Index n = k.rows();
    const Index p = alpha_hat.cols();
    if (warm_start && (warm_start->rows() != n || warm_start->cols() != p))
        throw std::invalid_argument("fista_group_lasso: warm start has the wrong shape");

    const Matrix target = k * alpha_hat;  // K alpha_hat, fixed
    const double lip = 2.0 * std::pow(spectral_norm(k, 1e-9), 2);
    if (lip == 0.0) {
        // K = 0: the smooth term vanishes and alpha = 0 minimizes the penalty.
        return FistaResult{Matrix::Zero(n, p), 0.0, 0.0, 0, true};
    }
    const double step = 1.0 / lip;
    // Below this level the objective is rounding noise relative to the
    // data scale and the relative-change test cannot fire (the gamma = 0
    // residual bottoms out around eps^2 * ||target||^2).
    const double objective_floor = std::pow(1e-13 * target.norm(), 2);

    Matrix x_prev = warm_start ? *warm_start : Matrix::Zero(n, p);
    Matrix x_cur = x_prev;
    Matrix p_prev = k * x_prev;  // cached K x; K y comes from a linear combination
    Matrix p_cur = p_prev;
    Matrix y = x_cur, ky = p_cur, grad(n, p), x_next(n, p);

    double t_cur = 1.0;
    double f_prev = (p_cur - target).squaredNorm() + gamma * row_norm_sum(x_cur);

    FistaResult res;
    res.converged = false;
    for (int m = 1; m <= opts.fista_max_iter; ++m) {
        grad.noalias() = 2.0 * (k * (ky - target));
        x_next = y - step * grad;
        group_prox_inplace(x_next, gamma * step);

        p_prev.swap(p_cur);
        p_cur.noalias() = k * x_next;
        x_prev.swap(x_cur);
        x_cur.swap(x_next);

        const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t_cur * t_cur));
        const double momentum = (t_cur - 1.0) / t_next;
        y = x_cur + momentum * (x_cur - x_prev);
        ky = p_cur + momentum * (p_cur - p_prev);
        t_cur = t_next;

        const double rsq = (p_cur - target).squaredNorm();
        const double f = rsq + gamma * row_norm_sum(x_cur);
        res.iterations = m;
        if (f <= objective_floor ||
            std::abs(f - f_prev) <= opts.fista_rel_tol * std::max({std::abs(f), std::abs(f_prev),
                                                                   1e-300})) {
            res.converged = true;
            res.objective = f;
            res.residual_sq = rsq;
            break;
        }
        f_prev = f;
        res.objective = f;
        res.residual_sq = rsq;
    }
    res.alpha = std::move(x_cur);
    return res;
}

SparsifyResult sparsify(const Matrix& k, const Matrix& alpha_hat, double epsilon,
                        const SolveOptions& opts) {
    if (!(epsilon > 0)) throw std::invalid_argument("sparsify: epsilon must be > 0");
    check_fista_inputs(k, alpha_hat, 0.0, opts);

    const Index n = k.rows();
    const Index p = alpha_hat.cols();
    const double budget = static_cast<double>(n) * epsilon * epsilon;

    const Matrix target = k * alpha_hat;
    const double target_sq = target.squaredNorm();

    // Zero-solution threshold from the subgradient condition at alpha = 0.
    const Matrix grad0 = k * target;  // K^2 alpha_hat
    double gamma_max = 0.0;
    for (Index i = 0; i < n; ++i) gamma_max = std::max(gamma_max, 2.0 * grad0.row(i).norm());

    if (target_sq <= budget) {
        // alpha = 0 is feasible, and no other point has smaller group norm.
        SparsifyResult res;
        res.alpha_tilde = Matrix::Zero(n, p);
        res.gamma_star = gamma_max;
        res.achieved_msd = target_sq / static_cast<double>(n);
        res.dual_value = gamma_max > 0 ? (target_sq - budget) / gamma_max : 0.0;
        res.converged = true;
        return res;
    }

    double lo = 0.0, hi = gamma_max;
    Matrix warm;
    bool have_warm = false;
    SparsifyResult best;
    bool have_best = false;
    double best_objective = 0.0;

    while (hi - lo > opts.bisect_rel_tol * gamma_max) {
        const double mid = 0.5 * (lo + hi);
        FistaResult sol =
            fista_group_lasso(k, alpha_hat, mid, opts, have_warm ? &warm : nullptr);
        warm = sol.alpha;
        have_warm = true;
        if (sol.residual_sq <= budget) {
            lo = mid;
            best.alpha_tilde = std::move(sol.alpha);
            best.gamma_star = mid;
            best.achieved_msd = sol.residual_sq / static_cast<double>(n);
            best.converged = sol.converged;
            best_objective = sol.objective;
            have_best = true;
        } else {
            hi = mid;
        }
    }

    if (!have_best) {
        // Every probe overshot the budget; fall back to the unpenalized
        // limit, which can always reach K alpha = K alpha_hat.
        FistaResult sol = fista_group_lasso(k, alpha_hat, 0.0, opts, have_warm ? &warm : nullptr);
        best.alpha_tilde = std::move(sol.alpha);
        best.gamma_star = 0.0;
        best.achieved_msd = sol.residual_sq / static_cast<double>(n);
        best.converged = sol.converged && sol.residual_sq <= budget * (1.0 + opts.slack_tol);
        best_objective = sol.objective;
    }

    if (best.achieved_msd > epsilon * epsilon * (1.0 + opts.slack_tol)) best.converged = false;
    best.dual_value = best.gamma_star > 0
                          ? (best_objective - budget) / best.gamma_star
                          : row_norm_sum(best.alpha_tilde);
    return best;
}

SparseModel extract_support(const BoundKernel& kernel, const SparsifyResult& solve,
                            double epsilon, double sv_threshold) {
    const Matrix& a = solve.alpha_tilde;
    if (a.rows() != kernel.size())
        throw std::invalid_argument("extract_support: alpha_tilde row count does not match kernel");
    if (!(sv_threshold > 0)) throw std::invalid_argument("extract_support: threshold must be > 0");

    double max_norm = 0.0;
    for (Index i = 0; i < a.rows(); ++i) max_norm = std::max(max_norm, a.row(i).norm());

    std::vector<Index> keep;
    if (max_norm > 0.0) {
        for (Index i = 0; i < a.rows(); ++i)
            if (a.row(i).norm() > sv_threshold * max_norm) keep.push_back(i);
    }

    Matrix rows(static_cast<Index>(keep.size()), a.cols());
    for (std::size_t r = 0; r < keep.size(); ++r)
        rows.row(static_cast<Index>(r)) = a.row(keep[static_cast<std::size_t>(r)]);

    return SparseModel{kernel.restrict_to(keep), std::move(keep),      std::move(rows),
                       epsilon,                  solve.gamma_star,     solve.achieved_msd,
                       solve.dual_value,         solve.converged};
}

SparseModel sparsify_model(const KrrModel& model, double epsilon, const SolveOptions& opts) {
    const Matrix k = model.kernel.gram();
    const SparsifyResult res = sparsify(k, model.alpha_hat, epsilon, opts);
    return extract_support(model.kernel, res, epsilon, opts.sv_threshold);
}

Vector sparse_predict(const SparseModel& m, const Eigen::Ref<const Vector>& x) {
    if (m.support.empty()) return Vector::Zero(m.output_dim());
    return m.alpha_tilde.transpose() * m.kernel.cross_row(x);
}

}  // namespace skrr
