// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "skrr/matio.hpp"

#include <array>
#include <cstdint>

namespace skrr {

/// Swiss-roll sample: 3-D points row-aligned with their ground-truth
/// (arc parameter, height) coordinates.
struct SwissRoll {
    Matrix points;     // n x 3
    Matrix intrinsic;  // n x 2
    std::uint64_t seed = 0;
};

/// The roll parametrization on the unit square:
///   t = 1.5 pi (1 + 2u),  h = 21 v,
///   point = (t cos t, h, t sin t),  intrinsic = (t, h).
/// Radii run from 1.5 pi to 4.5 pi, the conventional benchmark shape.
struct RollSample {
    std::array<double, 3> point;
    std::array<double, 2> intrinsic;
};
RollSample swiss_roll_map(double u, double v);

// Deterministic sample of n points: (u, v) pairs are drawn, u first, from
// Lcg64(seed). The same seed gives byte-identical output.
SwissRoll swiss_roll(Index n, std::uint64_t seed);

}  // namespace skrr
