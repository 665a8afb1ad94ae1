// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <Eigen/Core>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace skrr {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Points with one nonnegative integer class label per row.
struct LabeledSet {
    Matrix points;
    std::vector<long> labels;
};

// Locale-independent decimal text for 64-bit reals. 17 significant digits,
// which round-trips every finite double exactly.
std::string format_real(double v);

// Strict parse: the whole token must be one finite decimal number.
double parse_real(std::string_view token);

// Plain CSV, one row per line, no header. LF or CRLF accepted on read.
// Rejects ragged rows, unparsable tokens and non-finite values, each with
// the offending line number in the message.
Matrix read_matrix(const std::filesystem::path& path);

// Inverse of read_matrix; entries written with format_real. The file is
// written to a temporary sibling and renamed into place.
void write_matrix(const std::filesystem::path& path, const Matrix& m);

// CSV whose last column is a nonnegative integer label.
LabeledSet read_labeled(const std::filesystem::path& path);

// Shared plumbing, also used by the model-file reader.
// `first_line` is the 1-based number of lines[0] in the enclosing file.
Matrix parse_csv_lines(const std::vector<std::string>& lines,
                       const std::string& context, std::size_t first_line);
std::string matrix_to_csv(const Matrix& m);
void write_text_atomic(const std::filesystem::path& path, const std::string& text);
std::vector<std::string> read_lines(const std::filesystem::path& path);

}  // namespace skrr
