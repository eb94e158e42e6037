// Copyright 2026 The csgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "csgeom/embed.hpp"

#include <cmath>
#include <stdexcept>

#include "csgeom/combinatorics.hpp"

namespace csgeom {

namespace {

void require_definite(const EmbeddedVector& w, const char* who) {
    if (w.sig != Signature::Definite)
        throw std::invalid_argument(std::string(who) + ": definite signature required");
    if (w.vec.empty()) throw std::invalid_argument(std::string(who) + ": empty vector");
}

double ray_cosine(const EmbeddedVector& w1, const EmbeddedVector& w2, const char* who) {
    require_definite(w1, who);
    require_definite(w2, who);
    const double n1 = norm2(w1.vec);
    const double n2 = norm2(w2.vec);
    if (n1 == 0.0 || n2 == 0.0) throw std::invalid_argument(std::string(who) + ": zero vector");
    return std::abs(hermitian_inner(w1.vec, w2.vec)) / (n1 * n2);
}

}  // namespace

CVector veronese_map(const CVector& homogeneous, int degree) {
    const int nvars = static_cast<int>(homogeneous.size());
    const auto basis = monomial_exponents(nvars, degree);
    CVector out(basis.size());
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        Complex v = std::sqrt(static_cast<double>(multinomial(degree, basis[idx])));
        for (int i = 0; i < nvars; ++i) {
            const int a = basis[idx][static_cast<std::size_t>(i)];
            for (int p = 0; p < a; ++p) v *= homogeneous[static_cast<std::size_t>(i)];
        }
        out[idx] = v;
    }
    return out;
}

CVector minor_map(const CMatrix& a) {
    const int k = static_cast<int>(a.rows());
    const int n = static_cast<int>(a.cols());
    if (k > n) throw std::invalid_argument("minor_map: requires rows <= cols");
    const auto subsets = k_subsets(n, k);
    CVector out(subsets.size());
    for (std::size_t idx = 0; idx < subsets.size(); ++idx) {
        CMatrix sub(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c)
                sub(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                    a(static_cast<std::size_t>(r),
                      static_cast<std::size_t>(subsets[idx][static_cast<std::size_t>(c)]));
        out[idx] = determinant(sub);
    }
    return out;
}

EmbeddedVector iota(const Model& model, const ChartPoint& z) {
    validate_point(model, z);
    if (const auto* cp = std::get_if<ProjSpace>(&model)) {
        CVector homog(static_cast<std::size_t>(cp->n) + 1);
        homog[0] = 1.0;
        for (int i = 0; i < cp->n; ++i) homog[static_cast<std::size_t>(i) + 1] = z(0, static_cast<std::size_t>(i));
        return {veronese_map(homog, cp->m), Signature::Definite};
    }
    if (const auto* gr = std::get_if<Grassmann>(&model)) {
        CMatrix a(static_cast<std::size_t>(gr->k), static_cast<std::size_t>(gr->n));
        for (int r = 0; r < gr->k; ++r) {
            a(static_cast<std::size_t>(r), static_cast<std::size_t>(r)) = 1.0;
            for (int c = 0; c < gr->n - gr->k; ++c)
                a(static_cast<std::size_t>(r), static_cast<std::size_t>(gr->k + c)) =
                    z(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        }
        return {minor_map(a), Signature::Definite};
    }
    throw std::invalid_argument("iota: disc is embedded by iota_lorentz");
}

EmbeddedVector iota_lorentz(const Disc& d, const ChartPoint& z) {
    validate_point(Model{d}, z);
    if (d.twok != 1)
        throw std::invalid_argument("iota_lorentz: only the twok = 1 fundamental embedding is finite-dimensional");
    return {{Complex{1.0}, z(0, 0)}, Signature::Lorentz};
}

double cayley_distance(const EmbeddedVector& w1, const EmbeddedVector& w2) {
    return clamped_arccos(ray_cosine(w1, w2, "cayley_distance"));
}

double study_distance(const EmbeddedVector& w1, const EmbeddedVector& w2) {
    return 2.0 * clamped_arccos(ray_cosine(w1, w2, "study_distance"));
}

double wick_distance(const EmbeddedVector& w1, const EmbeddedVector& w2) {
    return study_distance(w1, w2);
}

double bargmann_distance(const EmbeddedVector& w1, const EmbeddedVector& w2) {
    const double dc = cayley_distance(w1, w2);
    return std::sqrt(2.0 * (1.0 - std::cos(dc)));
}

double diastasis(const Model& model, const ChartPoint& z1, const ChartPoint& z2) {
    const Complex k12 = kernel(model, z1, z2);
    const double a = std::abs(k12);
    if (!(a > 0.0)) throw std::domain_error("diastasis: polar pair, diastasis diverges");
    double d = potential(model, z1) + potential(model, z2) - 2.0 * std::log(a);
    if (d < 0.0) {
        if (d < -1e-9) throw std::logic_error("diastasis: negative value beyond roundoff");
        d = 0.0;
    }
    return d;
}

double pseudo_distance(const Disc& d, const ChartPoint& z1, const ChartPoint& z2) {
    const double o = std::abs(overlap(Model{d}, z1, z2));
    return std::acosh(std::max(1.0, 1.0 / o));
}

int differential_rank(const Model& model, const ChartPoint& z) {
    if (!is_compact(model))
        throw std::invalid_argument("differential_rank: compact models only");
    const double step = 1e-6;
    std::vector<CVector> cols;
    for (std::size_t r = 0; r < z.rows(); ++r)
        for (std::size_t c = 0; c < z.cols(); ++c) {
            ChartPoint zp = z, zm = z;
            zp(r, c) += step;
            zm(r, c) -= step;
            const CVector fp = iota(model, zp).vec;
            const CVector fm = iota(model, zm).vec;
            CVector col(fp.size());
            for (std::size_t i = 0; i < fp.size(); ++i) col[i] = (fp[i] - fm[i]) / (2.0 * step);
            cols.push_back(std::move(col));
        }
    return numerical_rank(cols, 1e-7);
}

EmbeddedVector ray_geodesic_point(const EmbeddedVector& w1, const EmbeddedVector& w2, double t) {
    require_definite(w1, "ray_geodesic_point");
    require_definite(w2, "ray_geodesic_point");
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("ray_geodesic_point: t outside [0,1]");
    const CVector u1 = normalized(w1.vec);
    CVector u2 = normalized(w2.vec);
    const Complex g = hermitian_inner(u1, u2);
    const double mod = std::abs(g);
    if (mod < 1e-12)
        throw std::invalid_argument("ray_geodesic_point: orthogonal rays have no unique geodesic");
    // fix the U(1) gauge: rotate u2 so <u1, u2> is real nonnegative
    const Complex phase = std::conj(g) / mod;
    for (Complex& x : u2) x *= phase;
    const double theta = clamped_arccos(mod);
    if (theta < 1e-12)
        throw std::invalid_argument("ray_geodesic_point: coincident rays");
    const double s = std::sin(theta);
    CVector out(u1.size());
    const double c1 = std::sin((1.0 - t) * theta) / s;
    const double c2 = std::sin(t * theta) / s;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = c1 * u1[i] + c2 * u2[i];
    return {normalized(out), Signature::Definite};
}

int section_count(const Model& model) {
    if (const auto* cp = std::get_if<ProjSpace>(&model))
        return static_cast<int>(monomial_exponents(cp->n + 1, cp->m).size());
    if (const auto* gr = std::get_if<Grassmann>(&model))
        return static_cast<int>(k_subsets(gr->n, gr->k).size());
    throw std::invalid_argument("section_count: compact models only");
}

}  // namespace csgeom
