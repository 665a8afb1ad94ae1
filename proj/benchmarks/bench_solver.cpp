// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "skrr/rng.hpp"
#include "skrr/sparse.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace skrr;

struct Instance {
    Matrix k;
    Matrix alpha_hat;
};

Instance make_instance(Index n) {
    Lcg64 rng(777);
    Matrix pts(n, 3);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < 3; ++j) pts(i, j) = rng.next_in(0, 6);
    const BoundKernel bk = BoundKernel::bind(GaussianKernel{2.0}, pts);
    Matrix y(n, 2);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < 2; ++j) y(i, j) = rng.next_in(-1, 1);
    const KrrModel model = krr_fit(bk, y, 0.1);
    return Instance{bk.gram(), model.alpha_hat};
}

void bm_fista_solve(benchmark::State& state) {
    const Instance inst = make_instance(state.range(0));
    const Matrix grad0 = inst.k * (inst.k * inst.alpha_hat);
    double gamma_max = 0;
    for (Index i = 0; i < grad0.rows(); ++i)
        gamma_max = std::max(gamma_max, 2.0 * grad0.row(i).norm());
    for (auto _ : state)
        benchmark::DoNotOptimize(fista_group_lasso(inst.k, inst.alpha_hat, 0.3 * gamma_max));
}
BENCHMARK(bm_fista_solve)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void bm_sparsify(benchmark::State& state) {
    const Instance inst = make_instance(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sparsify(inst.k, inst.alpha_hat, 0.02));
}
BENCHMARK(bm_sparsify)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace
