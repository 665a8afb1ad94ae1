// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "skrr/embed.hpp"
#include "skrr/krr.hpp"
#include "skrr/sparse.hpp"

#include <filesystem>

namespace skrr {

// Model files are plain text: bracketed section headers followed by
// key=value lines or CSV blocks, written with 17-significant-digit reals
// so a save/load round trip is exact.
//
//   KRR:        [kernel] [lambda] [points] [alpha] [meta]
//   sparse:     [kernel] [support_points] [alpha_tilde] [meta]
//   embedding:  [kernel] [points] [eigenvalues] [coordinates] [meta]
//
// The sparse [kernel] section carries the frozen full-training degree
// values for the normalized heat kernel; KRR and embedding models rebind
// their kernel from the stored points, which reproduces the degrees
// exactly.

enum class ModelKind { Krr, Sparse, Embedding };

ModelKind detect_model_kind(const std::filesystem::path& path);

void save_krr_model(const std::filesystem::path& path, const KrrModel& m);
KrrModel load_krr_model(const std::filesystem::path& path);

void save_sparse_model(const std::filesystem::path& path, const SparseModel& m);
SparseModel load_sparse_model(const std::filesystem::path& path);

void save_embedding_model(const std::filesystem::path& path, const SpectralEmbedding& emb);
SpectralEmbedding load_embedding_model(const std::filesystem::path& path);

}  // namespace skrr
