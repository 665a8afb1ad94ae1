// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "skrr/model_io.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace skrr;
using namespace testsup;

TEST_CASE("KRR model round trip is exact") {
    TempDir tmp("io_krr");
    Lcg64 rng(3);
    const Matrix pts = rand_matrix(rng, 8, 2, 0, 1);
    const BoundKernel bk = BoundKernel::bind(NormalizedHeatKernel{0.7, BallRule{3.0}}, pts);
    const KrrModel model = krr_fit(bk, rand_matrix(rng, 8, 2), 0.25);

    save_krr_model(tmp / "m.krr", model);
    CHECK(detect_model_kind(tmp / "m.krr") == ModelKind::Krr);
    const KrrModel back = load_krr_model(tmp / "m.krr");

    CHECK(back.lambda == model.lambda);
    CHECK(back.fit_residual == model.fit_residual);
    CHECK(back.alpha_hat == model.alpha_hat);
    CHECK(back.kernel.points() == model.kernel.points());
    // rebinding reproduces the frozen degrees exactly
    CHECK(back.kernel.degrees() == model.kernel.degrees());

    Vector q(2);
    q << 0.3, 0.6;
    CHECK(krr_predict(back, q) == krr_predict(model, q));
}

TEST_CASE("sparse model round trip keeps the frozen degrees") {
    TempDir tmp("io_sparse");
    Lcg64 rng(7);
    const Matrix pts = rand_matrix(rng, 10, 2, 0, 1);
    const BoundKernel bk = BoundKernel::bind(NormalizedHeatKernel{0.5, BallRule{3.0}}, pts);
    const KrrModel model = krr_fit(bk, rand_matrix(rng, 10, 2), 0.1);
    const SparseModel sparse = sparsify_model(model, 0.05, {});

    save_sparse_model(tmp / "m.sparse", sparse);
    CHECK(detect_model_kind(tmp / "m.sparse") == ModelKind::Sparse);
    const SparseModel back = load_sparse_model(tmp / "m.sparse");

    CHECK(back.support == sparse.support);
    CHECK(back.alpha_tilde == sparse.alpha_tilde);
    CHECK(back.kernel.points() == sparse.kernel.points());
    CHECK(back.kernel.degrees() == sparse.kernel.degrees());
    CHECK(back.epsilon == sparse.epsilon);
    CHECK(back.gamma_star == sparse.gamma_star);
    CHECK(back.achieved_msd == sparse.achieved_msd);
    CHECK(back.dual_value == sparse.dual_value);
    CHECK(back.converged == sparse.converged);

    if (sparse.support_count() > 0) {
        Vector q(2);
        q << 0.4, 0.2;
        CHECK(sparse_predict(back, q) == sparse_predict(sparse, q));
    }
}

TEST_CASE("empty-support sparse model survives the round trip") {
    TempDir tmp("io_sparse_empty");
    Lcg64 rng(11);
    const Matrix pts = rand_matrix(rng, 6, 3, 0, 1);
    const BoundKernel bk = BoundKernel::bind(GaussianKernel{1.0}, pts);
    const KrrModel model = krr_fit(bk, rand_matrix(rng, 6, 2), 0.1);
    const SparseModel sparse = sparsify_model(model, 1e9, {});
    REQUIRE(sparse.support.empty());

    save_sparse_model(tmp / "m.sparse", sparse);
    const SparseModel back = load_sparse_model(tmp / "m.sparse");
    CHECK(back.support.empty());
    CHECK(back.output_dim() == 2);
    Vector q(3);
    q << 0, 0, 0;
    CHECK(sparse_predict(back, q).size() == 2);
}

TEST_CASE("embedding model round trip") {
    TempDir tmp("io_embed");
    Lcg64 rng(13);
    const Matrix pts = rand_matrix(rng, 9, 2, 0, 1);
    const SpectralEmbedding emb =
        laplacian_eigenmaps(pts, NormalizedHeatKernel{0.5, BallRule{3.0}}, 2);
    save_embedding_model(tmp / "m.embed", emb);
    CHECK(detect_model_kind(tmp / "m.embed") == ModelKind::Embedding);
    const SpectralEmbedding back = load_embedding_model(tmp / "m.embed");
    CHECK(back.coordinates == emb.coordinates);
    CHECK(back.eigenvalues == emb.eigenvalues);
    CHECK(back.skip_trivial == emb.skip_trivial);
    CHECK(back.graph_components == emb.graph_components);
    Vector q(2);
    q << 0.5, 0.5;
    CHECK(nystrom_extend(back, q) == nystrom_extend(emb, q));
}

TEST_CASE("model files report malformed content with line numbers") {
    TempDir tmp("io_bad");
    write_file(tmp / "junk.txt", "not a model\n");
    CHECK_THROWS_AS((void)detect_model_kind(tmp / "junk.txt"), std::runtime_error);

    write_file(tmp / "missing.krr", "[kernel]\nvariant=gaussian\nsigma=1\n[alpha]\n1,2\n");
    const auto msg =
        thrown_message<std::runtime_error>([&] { (void)load_krr_model(tmp / "missing.krr"); });
    CHECK(msg.find("[points]") != std::string::npos);

    write_file(tmp / "badkv.krr",
               "[kernel]\nvariant=gaussian\nsigma=1\nbroken line\n[lambda]\n0\n[points]\n1\n"
               "[alpha]\n1\n");
    const auto msg2 =
        thrown_message<std::runtime_error>([&] { (void)load_krr_model(tmp / "badkv.krr"); });
    CHECK(msg2.find("line 4") != std::string::npos);
}
