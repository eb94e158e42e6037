// Copyright 2026 The csgeom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "csgeom/numerics.hpp"

namespace csgeom {

/// Deterministic substream RNG. A stream is addressed by (seed, stream index);
/// trial campaigns give every trial its own stream so that results do not
/// depend on evaluation order or thread count. All variates are produced from
/// raw mt19937_64 output (no std::*_distribution), so identical (seed, stream)
/// pairs yield identical draws on every platform.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream)
        : eng_(mix(mix(seed ^ 0x7f4a7c1592e6b3d1ULL) + stream)) {}

    /// Uniform in [0, 1).
    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller (cosine branch only).
    double gaussian() {
        double u1 = uniform01();
        while (u1 == 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Standard complex Gaussian, E|z|^2 = 1.
    Complex complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re / std::numbers::sqrt2, im / std::numbers::sqrt2};
    }

private:
    static std::uint64_t mix(std::uint64_t x) {
        // splitmix64 finalizer
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 eng_;
};

}  // namespace csgeom
