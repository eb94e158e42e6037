// Copyright 2026 The csgeom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "csgeom/lie_core.hpp"
#include "csgeom/numerics.hpp"
#include "csgeom/rng.hpp"

namespace csgeom {

/// CP^n carrying the n-th hyperplane-bundle power m (level-m symmetric
/// embedding). Chart: Z in C^n.
struct ProjSpace {
    int n = 1;
    int m = 1;
};

/// G_k(C^n) with the determinant bundle at level 1 (minor embedding).
/// Chart: k x (n-k) matrix Z; the point is the row span of [I_k | Z].
struct Grassmann {
    int k = 1;
    int n = 2;
};

/// Unit disc with weight exponent twok (= 2k, kept integral to avoid
/// branch cuts). The only noncompact catalog entry. Chart: |z| < 1.
struct Disc {
    int twok = 1;
};

using Model = std::variant<ProjSpace, Grassmann, Disc>;

/// Chart coordinates. ProjSpace: 1 x n. Grassmann: k x (n-k). Disc: 1 x 1.
using ChartPoint = CMatrix;

/// Parses the model mini-grammar: `cp:n=<int>,m=<int>` | `gr:k=<int>,n=<int>`
/// | `disc:twok=<int>`. Throws std::invalid_argument naming the offending
/// token on malformed input or out-of-range parameters.
Model parse_model(std::string_view s);

/// Canonical spec string (inverse of parse_model).
std::string model_name(const Model& model);

bool is_compact(const Model& model);
int chart_dim(const Model& model);

/// Dimension of the section space: C(n+m, m) for ProjSpace, C(n, k) for
/// Grassmann. Throws for the disc (infinite-dimensional section space).
int embedding_dim(const Model& model);

/// The flag-manifold description matched to a compact model:
/// cp:n,m -> (A_n, weight m*omega_1, node 1 crossed);
/// gr:k,n -> (A_{n-1}, weight omega_k, node k crossed).
FlagSpec flag_spec_for(const Model& model);

/// Throws std::invalid_argument when the point shape or domain does not
/// match the model (disc points must satisfy |z| < 1).
void validate_point(const Model& model, const ChartPoint& z);

/// Unnormalized reproducing kernel K(Z1, Z2) = <Z1|Z2>:
/// ProjSpace (1 + Z1^dag Z2)^m; Grassmann det(I + conj(Z1) Z2^T);
/// Disc (1 - conj(z1) z2)^(-twok).
Complex kernel(const Model& model, const ChartPoint& z1, const ChartPoint& z2);

/// Normalized overlap K(Z1,Z2) / sqrt(K(Z1,Z1) K(Z2,Z2)); modulus <= 1.
Complex overlap(const Model& model, const ChartPoint& z1, const ChartPoint& z2);

/// Kaehler potential log K(Z, Z).
double potential(const Model& model, const ChartPoint& z);

/// True iff the pair lies on each other's polar divisor:
/// |K(Z1,Z2)| <= tol * sqrt(K(Z1,Z1) K(Z2,Z2)). Compact models only.
bool is_polar(const Model& model, const ChartPoint& z1, const ChartPoint& z2, double tol);

/// Geodesic distance of the model's own metric, normalized so that it
/// agrees with the embedding angle to first order at coincident points.
double intrinsic_distance(const Model& model, const ChartPoint& z1, const ChartPoint& z2);

/// A Grassmann chart pair whose principal angles equal `angles` (each in
/// [0, pi/2), one per plane direction; requires n-k >= k). First point is
/// the origin, second has tan(angle) on the diagonal.
std::pair<ChartPoint, ChartPoint> construct_subspace_pair(const Grassmann& g,
                                                          const std::vector<double>& angles);

/// Unit-normalized embedded images of the torus-fixed points: the n+1
/// coordinate lines for ProjSpace (level-m images), the C(n,k) coordinate
/// subspaces for Grassmann. Compact models only.
std::vector<EmbeddedVector> fixed_points(const Model& model);

/// Random chart point: i.i.d. standard complex Gaussian entries for the
/// compact models; uniform angle with radius uniform in [0, 0.95] for the
/// disc.
ChartPoint sample_point(const Model& model, RngStream& rng);

}  // namespace csgeom
