// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "skrr/synth.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace skrr;

TEST_CASE("swiss_roll_map at the parameter origin") {
    // u=0, v=0: t = 1.5 pi, cos t = 0, sin t = -1
    const RollSample s = swiss_roll_map(0.0, 0.0);
    const double t = 1.5 * std::numbers::pi;
    CHECK(std::abs(s.point[0]) <= 1e-12);
    CHECK(s.point[1] == 0.0);
    CHECK(s.point[2] == doctest::Approx(-t).epsilon(1e-12));
    CHECK(s.intrinsic[0] == doctest::Approx(t).epsilon(1e-15));
    CHECK(s.intrinsic[1] == 0.0);
}

TEST_CASE("swiss_roll is deterministic in the seed") {
    const SwissRoll a = swiss_roll(200, 7);
    const SwissRoll b = swiss_roll(200, 7);
    CHECK(a.points == b.points);
    CHECK(a.intrinsic == b.intrinsic);
    const SwissRoll c = swiss_roll(200, 8);
    CHECK(a.points != c.points);
}

TEST_CASE("swiss_roll radii and heights stay in the parametrization range") {
    const SwissRoll roll = swiss_roll(1000, 7);
    const double lo = 1.5 * std::numbers::pi;
    const double hi = 4.5 * std::numbers::pi;
    for (Index i = 0; i < roll.points.rows(); ++i) {
        const double radius = std::hypot(roll.points(i, 0), roll.points(i, 2));
        CHECK(radius >= lo - 1e-9);
        CHECK(radius <= hi + 1e-9);
        CHECK(radius == doctest::Approx(roll.intrinsic(i, 0)).epsilon(1e-12));
        CHECK(roll.points(i, 1) >= 0.0);
        CHECK(roll.points(i, 1) <= 21.0);
    }
}

TEST_CASE("swiss_roll rejects n = 0") {
    CHECK_THROWS_AS((void)swiss_roll(0, 1), std::invalid_argument);
}

TEST_CASE("unrolled geometry: intrinsic distances dominate and order ambient ones") {
    // The roll is a developable surface, so for each point's k-NN list the
    // straight-line (chord) distance never exceeds the unrolled planar
    // distance, and the two orderings agree almost perfectly.
    const Index n = 1000;
    const SwissRoll roll = swiss_roll(n, 7);
    Matrix unrolled(n, 2);
    for (Index i = 0; i < n; ++i) {
        const double t = roll.intrinsic(i, 0);
        unrolled(i, 0) = 0.5 * (t * std::sqrt(1.0 + t * t) + std::asinh(t));
        unrolled(i, 1) = roll.intrinsic(i, 1);
    }

    const Index anchors = 50, k = 50;
    double total = 0;
    for (Index a = 0; a < anchors; ++a) {
        const Index anchor = a * (n / anchors);
        std::vector<std::pair<double, Index>> near;
        near.reserve(n - 1);
        for (Index i = 0; i < n; ++i)
            if (i != anchor)
                near.emplace_back((unrolled.row(i) - unrolled.row(anchor)).norm(), i);
        std::partial_sort(near.begin(), near.begin() + k, near.end());
        std::vector<double> intrinsic_d, ambient_d;
        for (Index j = 0; j < k; ++j) {
            const auto& [d, i] = near[static_cast<std::size_t>(j)];
            const double amb = (roll.points.row(i) - roll.points.row(anchor)).norm();
            CHECK(amb <= d * (1.0 + 1e-9));
            intrinsic_d.push_back(d);
            ambient_d.push_back(amb);
        }
        total += testsup::spearman(intrinsic_d, ambient_d);
    }
    CHECK(total / static_cast<double>(anchors) > 0.9);
}
