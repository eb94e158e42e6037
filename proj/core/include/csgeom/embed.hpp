// Copyright 2026 The csgeom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "csgeom/cs_models.hpp"
#include "csgeom/numerics.hpp"

namespace csgeom {

enum class DistanceKind { Cayley, Study, Wick, Bargmann, Diastasis, PseudoHyperbolic };

/// Degree-m symmetric-power map of a homogeneous vector, with square-root
/// multinomial coefficients so that <veronese(u), veronese(v)> = <u,v>^m.
/// Coordinates follow the monomial order of monomial_exponents.
CVector veronese_map(const CVector& homogeneous, int degree);

/// All k x k column minors of a k x n matrix, lexicographic column subsets.
CVector minor_map(const CMatrix& a);

/// Section embedding of a compact model into C^N, N = embedding_dim:
/// ProjSpace: degree-m monomials of (1, Z) with multinomial-root weights;
/// Grassmann: minors of [I | Z]. Satisfies
/// <iota(Z1), iota(Z2)> = kernel(Z1, Z2) identically.
EmbeddedVector iota(const Model& model, const ChartPoint& z);

/// Lorentz embedding z -> (1, z) of the disc at twok = 1. The indefinite
/// inner-product ratio reproduces 1/|overlap|.
EmbeddedVector iota_lorentz(const Disc& d, const ChartPoint& z);

/// arccos(|<w1,w2>| / (|w1| |w2|)) in [0, pi/2]. Definite signature only.
double cayley_distance(const EmbeddedVector& w1, const EmbeddedVector& w2);

/// Great-circle ray distance, 2 * cayley_distance, in [0, pi].
double study_distance(const EmbeddedVector& w1, const EmbeddedVector& w2);

/// Alias of study_distance (bit-identical by construction).
double wick_distance(const EmbeddedVector& w1, const EmbeddedVector& w2);

/// Chordal distance sqrt(2 (1 - cos d_c)).
double bargmann_distance(const EmbeddedVector& w1, const EmbeddedVector& w2);

/// Potential combination Phi(Z1,Z1) + Phi(Z2,Z2) - 2 log|K(Z1,Z2)|,
/// computed through the potentials rather than through the overlap.
/// Throws std::domain_error on a polar pair (the combination diverges).
double diastasis(const Model& model, const ChartPoint& z1, const ChartPoint& z2);

/// Hyperbolic ray distance arccosh(1 / |overlap|) on the disc.
double pseudo_distance(const Disc& d, const ChartPoint& z1, const ChartPoint& z2);

/// Rank of the complex Jacobian of iota at Z (central differences, step
/// 1e-6, rank threshold 1e-7). Full-rank means the chart dimension.
int differential_rank(const Model& model, const ChartPoint& z);

/// Point at parameter t in [0,1] on the ray-space geodesic from w1 to w2,
/// unit norm, with the second endpoint phase-aligned first. Throws for
/// orthogonal rays (no unique geodesic) and coincident rays.
EmbeddedVector ray_geodesic_point(const EmbeddedVector& w1, const EmbeddedVector& w2, double t);

/// Number of basis sections obtained by explicit enumeration of the
/// monomial or minor basis (not by a closed-form count).
int section_count(const Model& model);

}  // namespace csgeom
