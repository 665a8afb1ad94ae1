// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
//
// Prediction cost scales with the number of support vectors; this is the
// whole point of the sparse model, so measure it directly.

#include "skrr/rng.hpp"
#include "skrr/sparse.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace skrr;

struct Models {
    KrrModel full;
    SparseModel sparse;
};

Models make_models(Index n, double epsilon) {
    Lcg64 rng(4242);
    Matrix pts(n, 8);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < 8; ++j) pts(i, j) = rng.next_in(0, 5);
    const BoundKernel bk = BoundKernel::bind(GaussianKernel{3.0}, pts);
    Matrix y(n, 2);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < 2; ++j) y(i, j) = rng.next_in(-1, 1);
    const KrrModel model = krr_fit(bk, y, 0.1);
    return Models{model, sparsify_model(model, epsilon, {})};
}

void bm_krr_predict(benchmark::State& state) {
    const Models m = make_models(state.range(0), 0.05);
    const Vector q = Vector::Constant(8, 2.5);
    for (auto _ : state) benchmark::DoNotOptimize(krr_predict(m.full, q));
}
BENCHMARK(bm_krr_predict)->Arg(512)->Arg(2048);

void bm_sparse_predict(benchmark::State& state) {
    const Models m = make_models(state.range(0), 0.05);
    const Vector q = Vector::Constant(8, 2.5);
    state.SetLabel("support=" + std::to_string(m.sparse.support_count()) + "/" +
                   std::to_string(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sparse_predict(m.sparse, q));
}
BENCHMARK(bm_sparse_predict)->Arg(512)->Arg(2048);

}  // namespace
