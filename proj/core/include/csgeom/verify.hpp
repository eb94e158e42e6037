// Copyright 2026 The csgeom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "csgeom/cs_models.hpp"
#include "csgeom/embed.hpp"
#include "csgeom/lie_core.hpp"

namespace csgeom {
namespace verify {

/// Outcome of one seeded trial campaign. Reproducible bit-for-bit from
/// (check, model, trials, seed): per-trial RNG streams are derived from
/// (seed, trial index) and aggregation is order-independent.
struct CheckReport {
    std::string check;
    std::string model;
    long long trials = 0;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    double max_abs_error = 0.0;
    bool pass = false;
    std::vector<std::string> witnesses;  // empty exactly when pass
};

/// The seven independently computed invariants of a compact catalog model
/// with its matching flag description. Reported, never asserted equal:
/// the equality provably fails above the fundamental bundle level.
struct SevenNumbersReport {
    std::string model;
    std::string flag;
    std::uint64_t seed = 0;
    std::int64_t n1_max_orthogonal = 0;  // certified lower bound only
    std::int64_t n2_sections = 0;
    std::int64_t n3_bwb_dim = 0;
    std::int64_t n4_minimal_n = 0;
    std::int64_t n5_morse_count = 0;
    std::int64_t n6_euler_char = 0;
    std::int64_t n7_cell_count = 0;
    bool all_equal = false;
    std::array<std::string, 7> method;
};

/// Torus energy on a compact model: the diagonal Hamiltonian h acts on the
/// level-1 ambient space (dimension n+1 for cp, n for gr) and induces a
/// diagonal on the section basis. Entries must be strictly increasing.
struct EnergyFunction {
    Model model;
    std::vector<double> h;
};

EnergyFunction default_energy(const Model& model);
void validate_energy(const EnergyFunction& ef);

struct MorseResult {
    int count = 0;      // distinct critical points found
    int discarded = 0;  // starts that failed to converge
    int starts = 0;     // random starts requested (fixed-point seeds extra)
};

/// Overlap equals the normalized inner product of the section images
/// (two independent code paths).
CheckReport check_cauchy(const Model& model, long long trials, std::uint64_t seed,
                         double tol = 1e-10, int threads = 1);

/// arccos|overlap| equals the ray angle of the section images. Runs on the
/// same pair stream as check_cauchy.
CheckReport check_cauchy_angle(const Model& model, long long trials, std::uint64_t seed,
                               double tol = 1e-9, int threads = 1);

/// Compact: |D + 2 log cos theta| with D through the potential path and
/// theta through the embedding path. Disc: |e^{-D/2} cosh(delta) - 1|;
/// at twok = 1 the ray distance is also cross-checked against the
/// indefinite-signature embedding.
CheckReport check_diastasis(const Model& model, long long trials, std::uint64_t seed,
                            double tol = 1e-9, int threads = 1);

/// Whether |overlap| collapses onto a single curve in the intrinsic
/// distance: bins pairs by distance and reports the largest within-bin
/// spread after removing the linear trend (a plain max-min spread would be
/// dominated by the in-bin distance variation). For 2-plane Grassmannians
/// an equal-distance pair family with unequal overlaps is evaluated as an
/// explicit witness.
CheckReport check_two_point_homogeneity(const Model& model, long long trials, std::uint64_t seed,
                                        double bin_width = 1e-3, int threads = 1);

/// Additivity of the ray distance along the ray geodesic, interior grid
/// t = 0.1 .. 0.9. Orthogonal draws are rejected and redrawn.
CheckReport check_geodesic_additivity(int dim, long long trials, std::uint64_t seed,
                                      double tol = 1e-9, int threads = 1);

/// Transition probability identity |<u,v>|^2 = cos^2(rho/2) on random rays.
CheckReport check_anandan_aharonov(int dim, long long trials, std::uint64_t seed,
                                   double tol = 1e-12, int threads = 1);

/// Chordal/angular equivalence (2 sqrt2 / pi) d_c <= d_b <= d_c.
CheckReport check_bargmann_bounds(int dim, long long trials, std::uint64_t seed,
                                  double tol = 1e-12, int threads = 1);

/// Separated chart pairs map to separated rays and the differential has
/// full rank at every sample.
CheckReport check_injectivity(const Model& model, long long trials, std::uint64_t seed,
                              int threads = 1);

/// Distinct critical points of the torus energy found by multistart
/// projected gradient descent; every chart start is relocated by a random
/// level-1 unitary so that critical points outside the dense chart are
/// reachable. The torus fixed points are always included as seeds.
/// Requires starts >= 20 * (number of fixed points).
MorseResult morse_count(const EnergyFunction& ef, int starts, std::uint64_t seed);

/// Best cardinality of a set of mutually orthogonal coherent vectors:
/// exact maximum clique (Bron-Kerbosch) on the fixed-point orthogonality
/// graph, then randomized attempts to extend it by descent toward
/// orthogonality. A certified lower bound.
int max_orthogonal_set(const Model& model, int augment_trials, std::uint64_t seed);

/// Dimension of the linear span of sampled section images (rank at
/// eps = 1e-8). Requires samples >= 3 * embedding_dim.
int minimal_n(const Model& model, long long samples, std::uint64_t seed);

/// All seven invariants, each by its own route. The model and flag must be
/// a matched pair (cp:n,m <-> A_n, m*omega_1, node 1; gr:k,n <-> A_{n-1},
/// omega_k, node k).
SevenNumbersReport seven_numbers(const Model& model, const FlagSpec& flag, std::uint64_t seed);

}  // namespace verify
}  // namespace csgeom
