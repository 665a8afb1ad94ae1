// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
//
// Command-line front end: generate data, embed, fit, sparsify, project,
// sweep. All numeric output goes through the 17-significant-digit writer,
// so identical invocations produce byte-identical files. Exit codes:
// 0 success, 1 runtime or numerical failure, 2 usage error.

#include "skrr/embed.hpp"
#include "skrr/graph.hpp"
#include "skrr/krr.hpp"
#include "skrr/matio.hpp"
#include "skrr/metrics.hpp"
#include "skrr/model_io.hpp"
#include "skrr/sparse.hpp"
#include "skrr/synth.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace skrr;

struct KernelFlags {
    double sigma = 0;
    double temperature = 0;
    double tau = 0;
    Index knn = 0;

    void add_to(CLI::App& cmd, bool allow_gaussian) {
        if (allow_gaussian)
            cmd.add_option("--sigma", sigma, "Gaussian kernel width (exp(-d^2/sigma^2))");
        cmd.add_option("--temperature", temperature, "heat kernel temperature t");
        cmd.add_option("--tau", tau, "neighbor ball radius for the heat kernel");
        cmd.add_option("--knn", knn, "neighbor count for the heat kernel");
    }

    KernelSpec build() const {
        const bool heat = temperature > 0 || tau > 0 || knn > 0;
        if (sigma > 0 && heat)
            throw std::invalid_argument("choose either --sigma or the --temperature family");
        if (sigma > 0) return GaussianKernel{sigma};
        if (!heat)
            throw std::invalid_argument(
                "a kernel is required: --sigma, or --temperature with --tau or --knn");
        if (!(temperature > 0))
            throw std::invalid_argument("--temperature must be set and > 0 for the heat kernel");
        if ((tau > 0) == (knn > 0))
            throw std::invalid_argument("pick exactly one neighbor rule: --tau or --knn");
        NormalizedHeatKernel hk;
        hk.t = temperature;
        if (tau > 0)
            hk.rule = BallRule{tau};
        else
            hk.rule = KnnRule{knn};
        return hk;
    }
};

struct SolverFlags {
    SolveOptions opts;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--fista-max-iter", opts.fista_max_iter, "inner solver iteration cap");
        cmd.add_option("--fista-tol", opts.fista_rel_tol,
                       "inner solver relative objective tolerance");
        cmd.add_option("--bisect-tol", opts.bisect_rel_tol, "relative tolerance on gamma");
        cmd.add_option("--sv-threshold", opts.sv_threshold,
                       "relative row-norm cutoff for support vectors");
        cmd.add_option("--slack", opts.slack_tol, "allowed overshoot on the epsilon^2 budget");
    }
};

std::vector<long> read_label_column(const std::filesystem::path& path) {
    const Matrix m = read_matrix(path);
    if (m.cols() != 1)
        throw std::runtime_error(path.string() + ": label file must have exactly one column");
    std::vector<long> labels;
    labels.reserve(static_cast<std::size_t>(m.rows()));
    for (Index i = 0; i < m.rows(); ++i) {
        const double v = m(i, 0);
        const long l = static_cast<long>(v);
        if (static_cast<double>(l) != v || l < 0)
            throw std::runtime_error(path.string() + ": line " + std::to_string(i + 1) +
                                     ": labels must be nonnegative integers");
        labels.push_back(l);
    }
    return labels;
}

void cmd_swissroll(Index n, std::uint64_t seed, const std::string& prefix) {
    const SwissRoll roll = swiss_roll(n, seed);
    write_matrix(prefix + "points.csv", roll.points);
    write_matrix(prefix + "intrinsic.csv", roll.intrinsic);
    std::cout << "points=" << prefix << "points.csv intrinsic=" << prefix << "intrinsic.csv n="
              << n << " seed=" << seed << "\n";
}

void cmd_embed(const std::string& points_path, const KernelFlags& kf, Index dims,
               const std::string& out_embedding, const std::string& out_model) {
    const Matrix points = read_matrix(points_path);
    const KernelSpec spec = kf.build();
    const SpectralEmbedding emb = laplacian_eigenmaps(points, spec, dims);
    if (emb.graph_components > 1)
        std::cerr << "warning: neighbor graph has " << emb.graph_components
                  << " connected components; eigenmap coordinates will contain indicator "
                     "directions\n";
    write_matrix(out_embedding, emb.coordinates);
    if (!out_model.empty()) save_embedding_model(out_model, emb);
    std::cout << "n=" << points.rows() << " dims=" << dims << " components="
              << emb.graph_components << " top_retained_eigenvalue="
              << format_real(emb.eigenvalues[0]) << "\n";
}

void cmd_fit(const std::string& points_path, const std::string& embedding_path,
             const KernelFlags& kf, double lambda, const std::string& out) {
    if (lambda < 0) throw std::invalid_argument("--lambda must be >= 0");
    const Matrix points = read_matrix(points_path);
    const Matrix y = read_matrix(embedding_path);
    const KernelSpec spec = kf.build();
    const KrrModel model = krr_fit(BoundKernel::bind(spec, points), y, lambda);
    save_krr_model(out, model);
    std::cout << "n=" << points.rows() << " p=" << y.cols() << " lambda=" << format_real(lambda)
              << " fit_residual=" << format_real(model.fit_residual) << "\n";
}

void cmd_sparsify(const std::string& model_path, double epsilon, const SolverFlags& sf,
                  const std::string& out) {
    if (!(epsilon > 0)) throw std::invalid_argument("--epsilon must be > 0");
    const KrrModel model = load_krr_model(model_path);
    const SparseModel sparse = sparsify_model(model, epsilon, sf.opts);
    save_sparse_model(out, sparse);
    if (!sparse.converged)
        std::cerr << "warning: solver did not converge at the final gamma; the model is "
                     "usable but the tolerance may be violated\n";
    std::cout << "support_count=" << sparse.support_count() << " epsilon=" << format_real(epsilon)
              << " achieved_msd=" << format_real(sparse.achieved_msd)
              << " gamma_star=" << format_real(sparse.gamma_star)
              << " dual_value=" << format_real(sparse.dual_value)
              << " converged=" << (sparse.converged ? 1 : 0) << "\n";
}

void cmd_project(const std::string& model_path, const std::string& points_path,
                 const std::string& out) {
    const Matrix points = read_matrix(points_path);
    const ModelKind kind = detect_model_kind(model_path);
    Matrix proj;
    if (kind == ModelKind::Krr) {
        proj = krr_predict_batch(load_krr_model(model_path), points);
    } else if (kind == ModelKind::Sparse) {
        const SparseModel model = load_sparse_model(model_path);
        if (model.support.empty())
            std::cerr << "warning: model has an empty support set; projections are all zero\n";
        proj.resize(points.rows(), model.output_dim());
        for (Index r = 0; r < points.rows(); ++r) {
            try {
                proj.row(r) = sparse_predict(model, points.row(r).transpose()).transpose();
            } catch (const std::exception& e) {
                throw std::runtime_error("row " + std::to_string(r) + ": " + e.what());
            }
        }
    } else {
        throw std::runtime_error(model_path + ": expected a KRR or sparse model file");
    }
    write_matrix(out, proj);
    std::cout << "projected=" << points.rows() << " dims=" << proj.cols() << "\n";
}

struct SweepConfig {
    SweepInput input;
    std::vector<double> epsilons;
    std::vector<double> lambdas;
};

std::vector<double> parse_real_list(const std::string& text, const std::string& context) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        try {
            out.push_back(parse_real(text.substr(start, comma - start)));
        } catch (const std::exception& e) {
            throw std::runtime_error(context + ": " + e.what());
        }
        start = comma + 1;
    }
    return out;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
    const auto lines = read_lines(path);
    std::map<std::string, std::pair<std::string, std::size_t>> kv;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path.string() + ": line " + std::to_string(i + 1) +
                                     ": expected key=value, got '" + line + "'");
        kv[line.substr(0, eq)] = {line.substr(eq + 1), i + 1};
    }

    const auto take = [&](const std::string& key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second.first;
        kv.erase(it);
        return v;
    };
    const auto require = [&](const std::string& key) {
        auto v = take(key);
        if (!v) throw std::runtime_error(path.string() + ": missing required key '" + key + "'");
        return *v;
    };

    SweepConfig cfg;
    cfg.input.points = read_matrix(require("points"));
    cfg.input.y = read_matrix(require("embedding"));

    KernelFlags kf;
    const std::string kernel = require("kernel");
    if (kernel == "gaussian") {
        kf.sigma = parse_real(require("sigma"));
    } else if (kernel == "normalized_heat") {
        kf.temperature = parse_real(require("temperature"));
        if (auto tau = take("tau")) kf.tau = parse_real(*tau);
        if (auto k = take("knn")) kf.knn = static_cast<Index>(parse_real(*k));
    } else {
        throw std::runtime_error(path.string() + ": unknown kernel '" + kernel + "'");
    }
    cfg.input.kernel = kf.build();

    cfg.epsilons = parse_real_list(require("epsilon"), path.string() + ": epsilon");
    cfg.lambdas = parse_real_list(require("lambda"), path.string() + ": lambda");

    if (auto v = take("test_points")) cfg.input.test_points = read_matrix(*v);
    if (auto v = take("reference")) {
        const Matrix m = read_matrix(*v);
        if (m.cols() != 1)
            throw std::runtime_error(*v + ": reference signal must have exactly one column");
        cfg.input.reference_signal = m.col(0);
    }
    if (auto v = take("train_labels")) cfg.input.train_labels = read_label_column(*v);
    if (auto v = take("test_labels")) cfg.input.test_labels = read_label_column(*v);

    if (auto v = take("fista_max_iter"))
        cfg.input.options.fista_max_iter = static_cast<int>(parse_real(*v));
    if (auto v = take("fista_tol")) cfg.input.options.fista_rel_tol = parse_real(*v);
    if (auto v = take("bisect_tol")) cfg.input.options.bisect_rel_tol = parse_real(*v);
    if (auto v = take("sv_threshold")) cfg.input.options.sv_threshold = parse_real(*v);
    if (auto v = take("slack")) cfg.input.options.slack_tol = parse_real(*v);

    if (!kv.empty()) {
        const auto& [key, val] = *kv.begin();
        throw std::runtime_error(path.string() + ": line " + std::to_string(val.second) +
                                 ": unknown key '" + key + "'");
    }
    return cfg;
}

void cmd_sweep(const std::string& config_path, const std::string& out) {
    const SweepConfig cfg = load_sweep_config(config_path);
    const auto reports = sparsity_sweep(cfg.input, cfg.epsilons, cfg.lambdas);
    write_text_atomic(out, sweep_csv(reports));
    int failed = 0;
    for (const auto& r : reports) {
        if (r.failed) {
            ++failed;
            std::cerr << "cell epsilon=" << format_real(r.epsilon)
                      << " lambda=" << format_real(r.lambda) << " failed: " << r.error << "\n";
        }
    }
    std::cout << "cells=" << reports.size() << " failed=" << failed << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sparse approximation to kernel ridge regression for fast out-of-sample "
                 "manifold projection"};
    app.require_subcommand(1);

    // swissroll
    auto* sroll = app.add_subcommand("swissroll", "generate a deterministic Swiss-roll sample");
    Index n = 1000;
    std::uint64_t seed = 0;
    std::string out_prefix;
    sroll->add_option("--n", n, "number of points")->required();
    sroll->add_option("--seed", seed, "generator seed")->required();
    sroll->add_option("--out-prefix", out_prefix, "output path prefix")->required();
    sroll->callback([&] { cmd_swissroll(n, seed, out_prefix); });

    // embed
    auto* embed = app.add_subcommand("embed", "Laplacian-eigenmaps training embedding");
    std::string embed_points, embed_out, embed_model;
    Index dims = 2;
    KernelFlags embed_kernel;
    embed->add_option("--points", embed_points, "training points CSV")->required();
    embed_kernel.add_to(*embed, /*allow_gaussian=*/false);
    embed->add_option("--dims", dims, "embedding dimension p")->required();
    embed->add_option("--out-embedding", embed_out, "output CSV for coordinates")->required();
    embed->add_option("--out-model", embed_model, "optional embedding model file");
    embed->callback([&] { cmd_embed(embed_points, embed_kernel, dims, embed_out, embed_model); });

    // fit
    auto* fit = app.add_subcommand("fit", "fit kernel ridge regression to an embedding");
    std::string fit_points, fit_embedding, fit_out;
    double lambda = 0.0;
    KernelFlags fit_kernel;
    fit->add_option("--points", fit_points, "training points CSV")->required();
    fit->add_option("--embedding", fit_embedding, "training embedding CSV (Y)")->required();
    fit_kernel.add_to(*fit, /*allow_gaussian=*/true);
    fit->add_option("--lambda", lambda, "ridge regularization")->required();
    fit->add_option("--out", fit_out, "output model file")->required();
    fit->callback([&] { cmd_fit(fit_points, fit_embedding, fit_kernel, lambda, fit_out); });

    // sparsify
    auto* sparsify = app.add_subcommand("sparsify", "reduce a KRR model to its support vectors");
    std::string sp_model, sp_out;
    double epsilon = 0.0;
    SolverFlags solver;
    sparsify->add_option("--model", sp_model, "fitted KRR model file")->required();
    sparsify->add_option("--epsilon", epsilon, "root-mean-square error tolerance")->required();
    solver.add_to(*sparsify);
    sparsify->add_option("--out", sp_out, "output sparse model file")->required();
    sparsify->callback([&] { cmd_sparsify(sp_model, epsilon, solver, sp_out); });

    // project
    auto* project = app.add_subcommand("project", "project points through a model");
    std::string pr_model, pr_points, pr_out;
    project->add_option("--model", pr_model, "KRR or sparse model file")->required();
    project->add_option("--points", pr_points, "query points CSV")->required();
    project->add_option("--out", pr_out, "output embedding CSV")->required();
    project->callback([&] { cmd_project(pr_model, pr_points, pr_out); });

    // sweep
    auto* sweep = app.add_subcommand("sweep", "evaluate an epsilon x lambda grid");
    std::string sw_config, sw_out;
    sweep->add_option("--config", sw_config, "flat key=value sweep configuration")->required();
    sweep->add_option("--out", sw_out, "output CSV table")->required();
    sweep->callback([&] { cmd_sweep(sw_config, sw_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
