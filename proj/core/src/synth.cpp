// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "skrr/synth.hpp"

#include "skrr/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace skrr {

RollSample swiss_roll_map(double u, double v) {
    const double t = 1.5 * std::numbers::pi * (1.0 + 2.0 * u);
    const double h = 21.0 * v;
    return RollSample{{t * std::cos(t), h, t * std::sin(t)}, {t, h}};
}

SwissRoll swiss_roll(Index n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("swiss_roll: n must be >= 1");
    SwissRoll roll;
    roll.seed = seed;
    roll.points.resize(n, 3);
    roll.intrinsic.resize(n, 2);
    Lcg64 rng(seed);
    for (Index i = 0; i < n; ++i) {
        const double u = rng.next_double();
        const double v = rng.next_double();
        const RollSample s = swiss_roll_map(u, v);
        roll.points(i, 0) = s.point[0];
        roll.points(i, 1) = s.point[1];
        roll.points(i, 2) = s.point[2];
        roll.intrinsic(i, 0) = s.intrinsic[0];
        roll.intrinsic(i, 1) = s.intrinsic[1];
    }
    return roll;
}

}  // namespace skrr
