// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "skrr/kernels.hpp"
#include "skrr/rng.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace skrr;

Matrix random_points(Index n, Index d) {
    Lcg64 rng(12345);
    Matrix m(n, d);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < d; ++j) m(i, j) = rng.next_in(0, 4);
    return m;
}

void bm_gaussian_gram(benchmark::State& state) {
    const Index n = state.range(0);
    const BoundKernel bk = BoundKernel::bind(GaussianKernel{1.5}, random_points(n, 3));
    for (auto _ : state) benchmark::DoNotOptimize(bk.gram());
}
BENCHMARK(bm_gaussian_gram)->Arg(256)->Arg(512);

void bm_heat_bind(benchmark::State& state) {
    const Index n = state.range(0);
    const Matrix pts = random_points(n, 3);
    const KernelSpec spec = NormalizedHeatKernel{1.0, KnnRule{7}};
    for (auto _ : state) benchmark::DoNotOptimize(BoundKernel::bind(spec, pts));
}
BENCHMARK(bm_heat_bind)->Arg(256)->Arg(512);

void bm_cross_row(benchmark::State& state) {
    const Index n = state.range(0);
    const BoundKernel bk =
        BoundKernel::bind(NormalizedHeatKernel{1.0, KnnRule{7}}, random_points(n, 3));
    const Vector q = Vector::Constant(3, 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(bk.cross_row(q));
}
BENCHMARK(bm_cross_row)->Arg(256)->Arg(1024);

}  // namespace
