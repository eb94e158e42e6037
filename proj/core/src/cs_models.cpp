// Copyright 2026 The csgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "csgeom/cs_models.hpp"

#include <cassert>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "csgeom/combinatorics.hpp"

namespace csgeom {

namespace {

constexpr int kMaxEmbeddingDim = 4096;

Complex ipow(Complex base, int e) {
    Complex r = 1.0;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

int parse_int_field(std::string_view token, std::string_view key) {
    const std::size_t eq = token.find('=');
    if (eq == std::string_view::npos || token.substr(0, eq) != key)
        throw std::invalid_argument("model spec: expected '" + std::string(key) + "=<int>', got '" +
                                    std::string(token) + "'");
    const std::string_view num = token.substr(eq + 1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (ec != std::errc{} || ptr != num.data() + num.size())
        throw std::invalid_argument("model spec: bad integer in '" + std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    while (true) {
        const std::size_t pos = s.find(sep);
        if (pos == std::string_view::npos) {
            parts.push_back(s);
            return parts;
        }
        parts.push_back(s.substr(0, pos));
        s.remove_prefix(pos + 1);
    }
}

double kernel_self_real(const Model& model, const ChartPoint& z) {
    const Complex k = kernel(model, z, z);
    if (!(k.real() > 0.0) || std::abs(k.imag()) > 1e-10 * std::abs(k.real()))
        throw std::logic_error("kernel(Z,Z) not positive real");
    return k.real();
}

/// Orthonormal n x k frame spanning the row space of [I_k | Z].
CMatrix grassmann_frame(const Grassmann& g, const ChartPoint& z) {
    const int k = g.k, n = g.n;
    CMatrix f(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        f(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) = 1.0;
        for (int c = 0; c < n - k; ++c)
            f(static_cast<std::size_t>(k + c), static_cast<std::size_t>(j)) =
                z(static_cast<std::size_t>(j), static_cast<std::size_t>(c));
    }
    return orthonormalize_columns(f);
}

}  // namespace

Model parse_model(std::string_view s) {
    const std::size_t colon = s.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("model spec: missing ':' in '" + std::string(s) + "'");
    const std::string_view head = s.substr(0, colon);
    const std::vector<std::string_view> fields = split(s.substr(colon + 1), ',');

    Model model;
    if (head == "cp") {
        if (fields.size() != 2)
            throw std::invalid_argument("model spec: cp takes n=<int>,m=<int>");
        model = ProjSpace{parse_int_field(fields[0], "n"), parse_int_field(fields[1], "m")};
    } else if (head == "gr") {
        if (fields.size() != 2)
            throw std::invalid_argument("model spec: gr takes k=<int>,n=<int>");
        model = Grassmann{parse_int_field(fields[0], "k"), parse_int_field(fields[1], "n")};
    } else if (head == "disc") {
        if (fields.size() != 1)
            throw std::invalid_argument("model spec: disc takes twok=<int>");
        model = Disc{parse_int_field(fields[0], "twok")};
    } else {
        throw std::invalid_argument("model spec: unknown family '" + std::string(head) + "'");
    }

    if (const auto* cp = std::get_if<ProjSpace>(&model)) {
        if (cp->n < 1) throw std::invalid_argument("model spec: cp requires n >= 1");
        if (cp->m < 1) throw std::invalid_argument("model spec: cp requires m >= 1");
        if (binomial(cp->n + cp->m, cp->m) > kMaxEmbeddingDim)
            throw std::invalid_argument("model spec: cp section space too large");
    } else if (const auto* gr = std::get_if<Grassmann>(&model)) {
        if (gr->k < 1 || gr->k >= gr->n)
            throw std::invalid_argument("model spec: gr requires 0 < k < n");
        if (binomial(gr->n, gr->k) > kMaxEmbeddingDim)
            throw std::invalid_argument("model spec: gr section space too large");
    } else if (const auto* d = std::get_if<Disc>(&model)) {
        if (d->twok < 1) throw std::invalid_argument("model spec: disc requires twok >= 1");
    }
    return model;
}

std::string model_name(const Model& model) {
    std::ostringstream os;
    if (const auto* cp = std::get_if<ProjSpace>(&model))
        os << "cp:n=" << cp->n << ",m=" << cp->m;
    else if (const auto* gr = std::get_if<Grassmann>(&model))
        os << "gr:k=" << gr->k << ",n=" << gr->n;
    else
        os << "disc:twok=" << std::get<Disc>(model).twok;
    return os.str();
}

bool is_compact(const Model& model) { return !std::holds_alternative<Disc>(model); }

int chart_dim(const Model& model) {
    if (const auto* cp = std::get_if<ProjSpace>(&model)) return cp->n;
    if (const auto* gr = std::get_if<Grassmann>(&model)) return gr->k * (gr->n - gr->k);
    return 1;
}

int embedding_dim(const Model& model) {
    if (const auto* cp = std::get_if<ProjSpace>(&model))
        return static_cast<int>(binomial(cp->n + cp->m, cp->m));
    if (const auto* gr = std::get_if<Grassmann>(&model))
        return static_cast<int>(binomial(gr->n, gr->k));
    throw std::invalid_argument("embedding_dim: disc has no finite section space");
}

FlagSpec flag_spec_for(const Model& model) {
    FlagSpec spec;
    if (const auto* cp = std::get_if<ProjSpace>(&model)) {
        spec.type = LieType::A;
        spec.rank = cp->n;
        spec.crossed = {1};
        spec.weight.assign(static_cast<std::size_t>(spec.rank), 0);
        spec.weight[0] = cp->m;
    } else if (const auto* gr = std::get_if<Grassmann>(&model)) {
        spec.type = LieType::A;
        spec.rank = gr->n - 1;
        spec.crossed = {gr->k};
        spec.weight.assign(static_cast<std::size_t>(spec.rank), 0);
        spec.weight[static_cast<std::size_t>(gr->k - 1)] = 1;
    } else {
        throw std::invalid_argument("flag_spec_for: disc is not a flag manifold");
    }
    validate_flag_spec(spec);
    return spec;
}

void validate_point(const Model& model, const ChartPoint& z) {
    if (const auto* cp = std::get_if<ProjSpace>(&model)) {
        if (z.rows() != 1 || z.cols() != static_cast<std::size_t>(cp->n))
            throw std::invalid_argument("chart point: expected 1 x n for " + model_name(model));
    } else if (const auto* gr = std::get_if<Grassmann>(&model)) {
        if (z.rows() != static_cast<std::size_t>(gr->k) ||
            z.cols() != static_cast<std::size_t>(gr->n - gr->k))
            throw std::invalid_argument("chart point: expected k x (n-k) for " + model_name(model));
    } else {
        if (z.rows() != 1 || z.cols() != 1)
            throw std::invalid_argument("chart point: expected a scalar for " + model_name(model));
        if (!(std::abs(z(0, 0)) < 1.0))
            throw std::invalid_argument("chart point: disc coordinate must satisfy |z| < 1");
    }
    for (const Complex& x : z.data())
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
            throw std::invalid_argument("chart point: non-finite entry");
}

Complex kernel(const Model& model, const ChartPoint& z1, const ChartPoint& z2) {
    validate_point(model, z1);
    validate_point(model, z2);
    if (const auto* cp = std::get_if<ProjSpace>(&model)) {
        Complex s = 1.0;
        for (int i = 0; i < cp->n; ++i)
            s += std::conj(z1(0, static_cast<std::size_t>(i))) * z2(0, static_cast<std::size_t>(i));
        return ipow(s, cp->m);
    }
    if (const auto* gr = std::get_if<Grassmann>(&model)) {
        CMatrix m = CMatrix::identity(static_cast<std::size_t>(gr->k));
        const CMatrix prod = z1.conj() * z2.transpose();
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) += prod(r, c);
        return determinant(m);
    }
    const Disc& d = std::get<Disc>(model);
    const Complex w = 1.0 - std::conj(z1(0, 0)) * z2(0, 0);
    assert(std::abs(w) > 0.0);  // impossible inside the open disc
    return 1.0 / ipow(w, d.twok);
}

Complex overlap(const Model& model, const ChartPoint& z1, const ChartPoint& z2) {
    const Complex k12 = kernel(model, z1, z2);
    const double k11 = kernel_self_real(model, z1);
    const double k22 = kernel_self_real(model, z2);
    return k12 / std::sqrt(k11 * k22);
}

double potential(const Model& model, const ChartPoint& z) {
    return std::log(kernel_self_real(model, z));
}

bool is_polar(const Model& model, const ChartPoint& z1, const ChartPoint& z2, double tol) {
    if (!is_compact(model))
        throw std::invalid_argument("is_polar: disc kernel never vanishes");
    const Complex k12 = kernel(model, z1, z2);
    const double k11 = kernel_self_real(model, z1);
    const double k22 = kernel_self_real(model, z2);
    return std::abs(k12) <= tol * std::sqrt(k11 * k22);
}

double intrinsic_distance(const Model& model, const ChartPoint& z1, const ChartPoint& z2) {
    validate_point(model, z1);
    validate_point(model, z2);
    if (const auto* cp = std::get_if<ProjSpace>(&model)) {
        Complex s = 1.0;
        double n1 = 1.0, n2 = 1.0;
        for (int i = 0; i < cp->n; ++i) {
            const Complex a = z1(0, static_cast<std::size_t>(i));
            const Complex b = z2(0, static_cast<std::size_t>(i));
            s += std::conj(a) * b;
            n1 += std::norm(a);
            n2 += std::norm(b);
        }
        return std::sqrt(static_cast<double>(cp->m)) *
               clamped_arccos(std::abs(s) / std::sqrt(n1 * n2));
    }
    if (const auto* gr = std::get_if<Grassmann>(&model)) {
        const std::vector<double> theta =
            principal_angles(grassmann_frame(*gr, z1), grassmann_frame(*gr, z2));
        double s = 0.0;
        for (double t : theta) s += t * t;
        return std::sqrt(s);
    }
    const Disc& d = std::get<Disc>(model);
    const Complex a = z1(0, 0), b = z2(0, 0);
    const double num = 2.0 * std::norm(a - b);
    const double den = (1.0 - std::norm(a)) * (1.0 - std::norm(b));
    return std::sqrt(2.0 * d.twok) * 0.5 * std::acosh(1.0 + num / den);
}

std::pair<ChartPoint, ChartPoint> construct_subspace_pair(const Grassmann& g,
                                                          const std::vector<double>& angles) {
    if (static_cast<int>(angles.size()) != g.k)
        throw std::invalid_argument("construct_subspace_pair: need one angle per plane direction");
    if (g.n - g.k < g.k)
        throw std::invalid_argument("construct_subspace_pair: requires n-k >= k");
    ChartPoint z1(static_cast<std::size_t>(g.k), static_cast<std::size_t>(g.n - g.k));
    ChartPoint z2 = z1;
    for (int i = 0; i < g.k; ++i) {
        if (!(angles[static_cast<std::size_t>(i)] >= 0.0) ||
            angles[static_cast<std::size_t>(i)] >= std::numbers::pi / 2)
            throw std::invalid_argument("construct_subspace_pair: angles must lie in [0, pi/2)");
        z2(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) =
            std::tan(angles[static_cast<std::size_t>(i)]);
    }
    return {z1, z2};
}

std::vector<EmbeddedVector> fixed_points(const Model& model) {
    if (!is_compact(model))
        throw std::invalid_argument("fixed_points: compact models only");
    const int dim = embedding_dim(model);
    std::vector<EmbeddedVector> out;
    if (const auto* cp = std::get_if<ProjSpace>(&model)) {
        const auto basis = monomial_exponents(cp->n + 1, cp->m);
        for (int line = 0; line <= cp->n; ++line) {
            // image of the coordinate line e_line: the pure power monomial
            CVector v(static_cast<std::size_t>(dim));
            for (std::size_t idx = 0; idx < basis.size(); ++idx) {
                if (basis[idx][static_cast<std::size_t>(line)] == cp->m) {
                    v[idx] = 1.0;
                    break;
                }
            }
            out.push_back({std::move(v), Signature::Definite});
        }
    } else {
        const auto& gr = std::get<Grassmann>(model);
        const auto subsets = k_subsets(gr.n, gr.k);
        for (std::size_t idx = 0; idx < subsets.size(); ++idx) {
            CVector v(static_cast<std::size_t>(dim));
            v[idx] = 1.0;  // minor of the coordinate subspace at its own index
            out.push_back({std::move(v), Signature::Definite});
        }
    }
    return out;
}

ChartPoint sample_point(const Model& model, RngStream& rng) {
    if (std::holds_alternative<Disc>(model)) {
        ChartPoint z(1, 1);
        const double r = 0.95 * rng.uniform01();
        const double phi = 2.0 * std::numbers::pi * rng.uniform01();
        z(0, 0) = Complex{r * std::cos(phi), r * std::sin(phi)};
        return z;
    }
    std::size_t rows = 1, cols = 1;
    if (const auto* cp = std::get_if<ProjSpace>(&model)) {
        rows = 1;
        cols = static_cast<std::size_t>(cp->n);
    } else {
        const auto& gr = std::get<Grassmann>(model);
        rows = static_cast<std::size_t>(gr.k);
        cols = static_cast<std::size_t>(gr.n - gr.k);
    }
    ChartPoint z(rows, cols);
    for (Complex& x : z.data()) x = rng.complex_gaussian();
    return z;
}

}  // namespace csgeom
