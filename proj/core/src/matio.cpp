// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "skrr/matio.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace skrr {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(trim(line.substr(start)));
            break;
        }
        out.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

[[noreturn]] void fail(const std::string& context, std::size_t line, const std::string& what) {
    throw std::runtime_error(context + ": line " + std::to_string(line) + ": " + what);
}

}  // namespace

std::string format_real(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

double parse_real(std::string_view token) {
    double v{};
    auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
        throw std::runtime_error("unparsable number '" + std::string(token) + "'");
    if (!std::isfinite(v))
        throw std::runtime_error("non-finite value '" + std::string(token) + "'");
    return v;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    // Strip a UTF-8 BOM if one is present.
    if (!lines.empty() && lines[0].rfind("\xEF\xBB\xBF", 0) == 0) lines[0].erase(0, 3);
    return lines;
}

Matrix parse_csv_lines(const std::vector<std::string>& lines,
                       const std::string& context, std::size_t first_line) {
    if (lines.empty()) fail(context, first_line, "empty matrix (no rows)");
    const auto first = split_commas(lines[0]);
    const Index cols = static_cast<Index>(first.size());
    Matrix m(static_cast<Index>(lines.size()), cols);
    for (std::size_t r = 0; r < lines.size(); ++r) {
        const std::size_t ln = first_line + r;
        const auto tokens = split_commas(lines[r]);
        if (static_cast<Index>(tokens.size()) != cols)
            fail(context, ln,
                 "ragged row: expected " + std::to_string(cols) + " values, got " +
                     std::to_string(tokens.size()));
        for (Index c = 0; c < cols; ++c) {
            try {
                m(static_cast<Index>(r), c) = parse_real(tokens[static_cast<std::size_t>(c)]);
            } catch (const std::exception& e) {
                fail(context, ln, e.what());
            }
        }
    }
    return m;
}

Matrix read_matrix(const std::filesystem::path& path) {
    auto lines = read_lines(path);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return parse_csv_lines(lines, path.string(), 1);
}

std::string matrix_to_csv(const Matrix& m) {
    std::string out;
    out.reserve(static_cast<std::size_t>(m.size()) * 20);
    for (Index r = 0; r < m.rows(); ++r) {
        for (Index c = 0; c < m.cols(); ++c) {
            if (c > 0) out += ',';
            out += format_real(m(r, c));
        }
        out += '\n';
    }
    return out;
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write file: " + tmp.string());
        out << text;
        if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw std::runtime_error("cannot rename " + tmp.string() + " to " + path.string() +
                                     ": " + ec.message());
}

void write_matrix(const std::filesystem::path& path, const Matrix& m) {
    if (m.rows() < 1 || m.cols() < 1)
        throw std::invalid_argument("write_matrix: matrix must be at least 1x1");
    if (!m.allFinite())
        throw std::invalid_argument("write_matrix: matrix contains non-finite entries");
    write_text_atomic(path, matrix_to_csv(m));
}

LabeledSet read_labeled(const std::filesystem::path& path) {
    auto lines = read_lines(path);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    const std::string context = path.string();
    if (lines.empty()) fail(context, 1, "empty dataset");

    const auto first = split_commas(lines[0]);
    if (first.size() < 2) fail(context, 1, "need at least one point column plus a label column");
    const Index cols = static_cast<Index>(first.size()) - 1;

    LabeledSet set;
    set.points.resize(static_cast<Index>(lines.size()), cols);
    set.labels.reserve(lines.size());
    for (std::size_t r = 0; r < lines.size(); ++r) {
        const std::size_t ln = 1 + r;
        const auto tokens = split_commas(lines[r]);
        if (static_cast<Index>(tokens.size()) != cols + 1)
            fail(context, ln,
                 "ragged row: expected " + std::to_string(cols + 1) + " values, got " +
                     std::to_string(tokens.size()));
        for (Index c = 0; c < cols; ++c) {
            try {
                set.points(static_cast<Index>(r), c) =
                    parse_real(tokens[static_cast<std::size_t>(c)]);
            } catch (const std::exception& e) {
                fail(context, ln, e.what());
            }
        }
        const auto tok = tokens.back();
        long label{};
        auto res = std::from_chars(tok.data(), tok.data() + tok.size(), label);
        if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
            fail(context, ln, "non-integer label '" + std::string(tok) + "'");
        if (label < 0) fail(context, ln, "negative label " + std::to_string(label));
        set.labels.push_back(label);
    }
    return set;
}

}  // namespace skrr
