// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "skrr/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace skrr {

double mean_sq_discrepancy(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("mean_sq_discrepancy: shape mismatch (" +
                                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                    " vs " + std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()) + ")");
    return (a - b).squaredNorm() / static_cast<double>(a.rows());
}

double pearson_corr(const Eigen::Ref<const Vector>& a, const Eigen::Ref<const Vector>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("pearson_corr: length mismatch");
    if (a.size() < 2) throw std::invalid_argument("pearson_corr: need at least 2 samples");
    const Vector da = a.array() - a.mean();
    const Vector db = b.array() - b.mean();
    const double va = da.squaredNorm();
    const double vb = db.squaredNorm();
    if (va == 0.0 || vb == 0.0)
        throw std::invalid_argument("pearson_corr: constant input (zero variance)");
    return da.dot(db) / std::sqrt(va * vb);
}

NnClassification nn_classify(const Matrix& train_embed, const std::vector<long>& train_labels,
                             const Matrix& test_embed, const std::vector<long>* truth) {
    if (train_embed.rows() < 1) throw std::invalid_argument("nn_classify: empty training set");
    if (static_cast<Index>(train_labels.size()) != train_embed.rows())
        throw std::invalid_argument("nn_classify: label count does not match training rows");
    if (test_embed.cols() != train_embed.cols())
        throw std::invalid_argument("nn_classify: dimension mismatch between train and test");
    if (truth && static_cast<Index>(truth->size()) != test_embed.rows())
        throw std::invalid_argument("nn_classify: truth label count does not match test rows");

    NnClassification out;
    out.labels.reserve(static_cast<std::size_t>(test_embed.rows()));
    Index correct = 0;
    for (Index r = 0; r < test_embed.rows(); ++r) {
        Index best = 0;
        double best_d = (train_embed.row(0) - test_embed.row(r)).squaredNorm();
        for (Index i = 1; i < train_embed.rows(); ++i) {
            const double d = (train_embed.row(i) - test_embed.row(r)).squaredNorm();
            if (d < best_d) {  // strict: ties keep the lowest index
                best_d = d;
                best = i;
            }
        }
        const long label = train_labels[static_cast<std::size_t>(best)];
        out.labels.push_back(label);
        if (truth && label == (*truth)[static_cast<std::size_t>(r)]) ++correct;
    }
    if (truth)
        out.rate = static_cast<double>(correct) / static_cast<double>(test_embed.rows());
    return out;
}

std::vector<EvalReport> sparsity_sweep(const SweepInput& in, const std::vector<double>& epsilons,
                                       const std::vector<double>& lambdas) {
    if (epsilons.empty() || lambdas.empty())
        throw std::invalid_argument("sparsity_sweep: empty parameter grid");
    if (in.reference_signal && !in.test_points)
        throw std::invalid_argument("sparsity_sweep: reference signal needs test points");
    if ((in.train_labels || in.test_labels) &&
        !(in.train_labels && in.test_labels && in.test_points))
        throw std::invalid_argument(
            "sparsity_sweep: classification needs train labels, test labels and test points");

    const BoundKernel kernel = BoundKernel::bind(in.kernel, in.points);

    // One KRR fit per lambda, shared across the epsilon grid.
    std::vector<std::optional<KrrModel>> fits(lambdas.size());
    std::vector<std::string> fit_errors(lambdas.size());
    for (std::size_t li = 0; li < lambdas.size(); ++li) {
        try {
            fits[li] = krr_fit(kernel, in.y, lambdas[li]);
        } catch (const std::exception& e) {
            fit_errors[li] = e.what();
        }
    }

    std::vector<EvalReport> reports;
    reports.reserve(epsilons.size() * lambdas.size());
    for (double eps : epsilons) {
        for (std::size_t li = 0; li < lambdas.size(); ++li) {
            EvalReport rep;
            rep.epsilon = eps;
            rep.lambda = lambdas[li];
            try {
                if (!fits[li]) throw std::runtime_error(fit_errors[li]);
                const SparseModel model = sparsify_model(*fits[li], eps, in.options);
                rep.sv_count = model.support_count();
                rep.msd = model.achieved_msd;
                if (in.test_points) {
                    Matrix proj(in.test_points->rows(), in.y.cols());
                    for (Index r = 0; r < in.test_points->rows(); ++r)
                        proj.row(r) =
                            sparse_predict(model, in.test_points->row(r).transpose()).transpose();
                    if (in.reference_signal) {
                        if (in.y.cols() != 1)
                            throw std::runtime_error(
                                "correlation evaluation needs a 1-D embedding");
                        // Eigenvector sign is arbitrary between runs, so report |CC|.
                        rep.correlation =
                            std::abs(pearson_corr(proj.col(0), *in.reference_signal));
                    }
                    if (in.train_labels)
                        rep.class_rate =
                            nn_classify(in.y, *in.train_labels, proj, &*in.test_labels).rate;
                }
            } catch (const std::exception& e) {
                rep.failed = true;
                rep.error = e.what();
            }
            reports.push_back(std::move(rep));
        }
    }
    return reports;
}

std::string sweep_csv(const std::vector<EvalReport>& reports) {
    std::string out = "epsilon,lambda,sv_count,msd,correlation,class_rate\n";
    for (const auto& r : reports) {
        out += format_real(r.epsilon);
        out += ',';
        out += format_real(r.lambda);
        out += ',';
        if (!r.failed) {
            out += std::to_string(r.sv_count);
            out += ',';
            out += format_real(r.msd);
        } else {
            out += ',';
        }
        out += ',';
        if (r.correlation) out += format_real(*r.correlation);
        out += ',';
        if (r.class_rate) out += format_real(*r.class_rate);
        out += '\n';
    }
    return out;
}

}  // namespace skrr
