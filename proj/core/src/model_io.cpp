// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "skrr/model_io.hpp"

#include <map>
#include <stdexcept>

namespace skrr {

namespace {

struct Section {
    std::string name;
    std::size_t header_line = 0;  // 1-based line of the [name] header
    std::vector<std::string> body;
};

std::vector<Section> read_sections(const std::filesystem::path& path) {
    const auto lines = read_lines(path);
    std::vector<Section> sections;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (!line.empty() && line.front() == '[' && line.back() == ']') {
            sections.push_back(Section{line.substr(1, line.size() - 2), i + 1, {}});
            continue;
        }
        if (sections.empty()) {
            if (line.empty()) continue;
            throw std::runtime_error(path.string() + ": line " + std::to_string(i + 1) +
                                     ": content before the first section header");
        }
        sections.back().body.push_back(line);
    }
    if (sections.empty())
        throw std::runtime_error(path.string() + ": not a model file (no sections)");
    // Trailing blank lines inside a section are padding, not rows.
    for (auto& s : sections)
        while (!s.body.empty() && s.body.back().empty()) s.body.pop_back();
    return sections;
}

const Section* find_section(const std::vector<Section>& sections, const std::string& name) {
    for (const auto& s : sections)
        if (s.name == name) return &s;
    return nullptr;
}

const Section& require_section(const std::vector<Section>& sections, const std::string& name,
                               const std::string& context) {
    const Section* s = find_section(sections, name);
    if (!s) throw std::runtime_error(context + ": missing [" + name + "] section");
    return *s;
}

std::map<std::string, std::string> parse_kv(const Section& s, const std::string& context) {
    std::map<std::string, std::string> kv;
    for (std::size_t i = 0; i < s.body.size(); ++i) {
        const std::string& line = s.body[i];
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(context + ": line " +
                                     std::to_string(s.header_line + 1 + i) +
                                     ": expected key=value, got '" + line + "'");
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

const std::string& kv_get(const std::map<std::string, std::string>& kv, const std::string& key,
                          const std::string& context) {
    auto it = kv.find(key);
    if (it == kv.end()) throw std::runtime_error(context + ": missing key '" + key + "'");
    return it->second;
}

Matrix section_matrix(const Section& s, const std::string& context) {
    return parse_csv_lines(s.body, context + " [" + s.name + "]", s.header_line + 1);
}

std::string csv_join(const Vector& v) {
    std::string out;
    for (Index i = 0; i < v.size(); ++i) {
        if (i > 0) out += ',';
        out += format_real(v[i]);
    }
    return out;
}

Vector parse_csv_vector(const std::string& text, const std::string& context) {
    if (text.empty()) return Vector();
    std::vector<double> vals;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const std::string tok = text.substr(start, comma - start);
        try {
            vals.push_back(parse_real(tok));
        } catch (const std::exception& e) {
            throw std::runtime_error(context + ": " + e.what());
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    Vector v(static_cast<Index>(vals.size()));
    for (std::size_t i = 0; i < vals.size(); ++i) v[static_cast<Index>(i)] = vals[i];
    return v;
}

std::string kernel_block(const KernelSpec& spec) {
    std::string out = "[kernel]\n";
    for (const auto& [key, value] : kernel_spec_to_kv(spec)) out += key + "=" + value + "\n";
    return out;
}

long parse_long(const std::string& text, const std::string& context) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(context + ": bad integer '" + text + "'");
    }
}

}  // namespace

ModelKind detect_model_kind(const std::filesystem::path& path) {
    const auto sections = read_sections(path);
    if (find_section(sections, "alpha")) return ModelKind::Krr;
    if (find_section(sections, "alpha_tilde")) return ModelKind::Sparse;
    if (find_section(sections, "coordinates")) return ModelKind::Embedding;
    throw std::runtime_error(path.string() + ": unrecognized model file");
}

void save_krr_model(const std::filesystem::path& path, const KrrModel& m) {
    std::string out = kernel_block(m.kernel.spec());
    out += "[lambda]\n" + format_real(m.lambda) + "\n";
    out += "[points]\n" + matrix_to_csv(m.kernel.points());
    out += "[alpha]\n" + matrix_to_csv(m.alpha_hat);
    out += "[meta]\nfit_residual=" + format_real(m.fit_residual) + "\n";
    write_text_atomic(path, out);
}

KrrModel load_krr_model(const std::filesystem::path& path) {
    const std::string context = path.string();
    const auto sections = read_sections(path);
    const auto kernel_kv = parse_kv(require_section(sections, "kernel", context), context);
    const KernelSpec spec = kernel_spec_from_kv(kernel_kv, context);
    const Matrix points = section_matrix(require_section(sections, "points", context), context);
    const auto& lambda_sec = require_section(sections, "lambda", context);
    if (lambda_sec.body.size() != 1)
        throw std::runtime_error(context + ": [lambda] must hold exactly one value");
    const double lambda = parse_real(lambda_sec.body[0]);
    Matrix alpha = section_matrix(require_section(sections, "alpha", context), context);
    if (alpha.rows() != points.rows())
        throw std::runtime_error(context + ": alpha rows do not match point count");

    double fit_residual = 0.0;
    if (const Section* meta = find_section(sections, "meta")) {
        const auto kv = parse_kv(*meta, context);
        if (auto it = kv.find("fit_residual"); it != kv.end())
            fit_residual = parse_real(it->second);
    }
    return KrrModel{BoundKernel::bind(spec, points), std::move(alpha), lambda, fit_residual};
}

void save_sparse_model(const std::filesystem::path& path, const SparseModel& m) {
    std::string out = kernel_block(m.kernel.spec());
    if (m.kernel.degrees().size() > 0) out += "degrees=" + csv_join(m.kernel.degrees()) + "\n";
    out += "[support_points]\n";
    if (m.support_count() > 0) out += matrix_to_csv(m.kernel.points());
    out += "[alpha_tilde]\n";
    if (m.support_count() > 0) out += matrix_to_csv(m.alpha_tilde);
    out += "[meta]\n";
    out += "epsilon=" + format_real(m.epsilon) + "\n";
    out += "gamma_star=" + format_real(m.gamma_star) + "\n";
    out += "achieved_msd=" + format_real(m.achieved_msd) + "\n";
    out += "dual_value=" + format_real(m.dual_value) + "\n";
    out += "converged=" + std::string(m.converged ? "1" : "0") + "\n";
    out += "dims=" + std::to_string(m.output_dim()) + "\n";
    out += "point_dim=" + std::to_string(m.kernel.dim()) + "\n";
    std::string idx;
    for (std::size_t i = 0; i < m.support.size(); ++i) {
        if (i > 0) idx += ',';
        idx += std::to_string(m.support[i]);
    }
    out += "support_indices=" + idx + "\n";
    write_text_atomic(path, out);
}

SparseModel load_sparse_model(const std::filesystem::path& path) {
    const std::string context = path.string();
    const auto sections = read_sections(path);
    const auto kernel_kv = parse_kv(require_section(sections, "kernel", context), context);
    const KernelSpec spec = kernel_spec_from_kv(kernel_kv, context);
    const auto meta = parse_kv(require_section(sections, "meta", context), context);

    const Index dims = parse_long(kv_get(meta, "dims", context), context);
    const Index point_dim = parse_long(kv_get(meta, "point_dim", context), context);

    const auto& pts_sec = require_section(sections, "support_points", context);
    const auto& alpha_sec = require_section(sections, "alpha_tilde", context);
    Matrix points = pts_sec.body.empty() ? Matrix(0, point_dim) : section_matrix(pts_sec, context);
    Matrix alpha = alpha_sec.body.empty() ? Matrix(0, dims) : section_matrix(alpha_sec, context);
    if (alpha.rows() != points.rows())
        throw std::runtime_error(context + ": alpha_tilde rows do not match support points");

    Vector degrees;
    if (std::holds_alternative<NormalizedHeatKernel>(spec)) {
        auto it = kernel_kv.find("degrees");
        if (it != kernel_kv.end())
            degrees = parse_csv_vector(it->second, context);
        if (degrees.size() != points.rows())
            throw std::runtime_error(context + ": degree count does not match support points");
    }

    std::vector<Index> support;
    {
        const std::string& idx = kv_get(meta, "support_indices", context);
        std::size_t start = 0;
        while (start < idx.size()) {
            auto comma = idx.find(',', start);
            if (comma == std::string::npos) comma = idx.size();
            support.push_back(parse_long(idx.substr(start, comma - start), context));
            start = comma + 1;
        }
    }
    if (static_cast<Index>(support.size()) != points.rows())
        throw std::runtime_error(context + ": support_indices count does not match support points");

    SparseModel m{BoundKernel(spec, std::move(points), std::move(degrees)),
                  std::move(support),
                  std::move(alpha),
                  parse_real(kv_get(meta, "epsilon", context)),
                  parse_real(kv_get(meta, "gamma_star", context)),
                  parse_real(kv_get(meta, "achieved_msd", context)),
                  parse_real(kv_get(meta, "dual_value", context)),
                  kv_get(meta, "converged", context) == "1"};
    return m;
}

void save_embedding_model(const std::filesystem::path& path, const SpectralEmbedding& emb) {
    std::string out = kernel_block(emb.kernel.spec());
    out += "[points]\n" + matrix_to_csv(emb.kernel.points());
    out += "[eigenvalues]\n" + csv_join(emb.eigenvalues) + "\n";
    out += "[coordinates]\n" + matrix_to_csv(emb.coordinates);
    out += "[meta]\n";
    out += "skip_trivial=" + std::string(emb.skip_trivial ? "1" : "0") + "\n";
    out += "components=" + std::to_string(emb.graph_components) + "\n";
    write_text_atomic(path, out);
}

SpectralEmbedding load_embedding_model(const std::filesystem::path& path) {
    const std::string context = path.string();
    const auto sections = read_sections(path);
    const auto kernel_kv = parse_kv(require_section(sections, "kernel", context), context);
    const KernelSpec spec = kernel_spec_from_kv(kernel_kv, context);
    const Matrix points = section_matrix(require_section(sections, "points", context), context);
    const auto& eig_sec = require_section(sections, "eigenvalues", context);
    if (eig_sec.body.size() != 1)
        throw std::runtime_error(context + ": [eigenvalues] must hold exactly one CSV row");
    const Vector eigenvalues = parse_csv_vector(eig_sec.body[0], context);
    Matrix coords = section_matrix(require_section(sections, "coordinates", context), context);
    if (coords.rows() != points.rows())
        throw std::runtime_error(context + ": coordinates rows do not match point count");
    if (coords.cols() != eigenvalues.size())
        throw std::runtime_error(context + ": eigenvalue count does not match coordinate columns");

    bool skip_trivial = true;
    int components = 1;
    if (const Section* meta = find_section(sections, "meta")) {
        const auto kv = parse_kv(*meta, context);
        if (auto it = kv.find("skip_trivial"); it != kv.end()) skip_trivial = it->second == "1";
        if (auto it = kv.find("components"); it != kv.end())
            components = static_cast<int>(parse_long(it->second, context));
    }
    return SpectralEmbedding{std::move(coords), eigenvalues, BoundKernel::bind(spec, points),
                             skip_trivial, components};
}

}  // namespace skrr
