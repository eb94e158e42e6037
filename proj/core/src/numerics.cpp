// Copyright 2026 The csgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "csgeom/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace csgeom {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

CMatrix CMatrix::conj() const {
    CMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = std::conj(data_[i]);
    return m;
}

CMatrix CMatrix::transpose() const {
    CMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

CVector CMatrix::col(std::size_t c) const {
    CVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

CVector CMatrix::row(std::size_t r) const {
    CVector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("CMatrix product: inner dimension mismatch");
    CMatrix m(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{}) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) m(r, c) += ark * b(k, c);
        }
    return m;
}

Complex determinant(const CMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: square matrix required");
    const std::size_t n = a.rows();
    if (n == 0) return 1.0;
    CMatrix lu = a;
    Complex det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(lu(k, k));
        for (std::size_t r = k + 1; r < n; ++r) {
            const double v = std::abs(lu(r, k));
            if (v > best) { best = v; piv = r; }
        }
        if (best == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(lu(k, c), lu(piv, c));
            det = -det;
        }
        det *= lu(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            const Complex f = lu(r, k) / lu(k, k);
            for (std::size_t c = k; c < n; ++c) lu(r, c) -= f * lu(k, c);
        }
    }
    return det;
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("frobenius_distance: shape mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a.data()[i] - b.data()[i]);
    return std::sqrt(s);
}

Complex hermitian_inner(const CVector& u, const CVector& v, Signature sig) {
    if (u.size() != v.size()) throw std::invalid_argument("hermitian_inner: dimension mismatch");
    if (u.empty()) throw std::invalid_argument("hermitian_inner: empty vectors");
    if (sig == Signature::Lorentz && u.size() < 2)
        throw std::invalid_argument("hermitian_inner: Lorentz form needs dimension >= 2");
    Complex s = std::conj(u[0]) * v[0];
    if (sig == Signature::Definite) {
        for (std::size_t i = 1; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
    } else {
        for (std::size_t i = 1; i < u.size(); ++i) s -= std::conj(u[i]) * v[i];
    }
    return s;
}

double norm2(const CVector& u) {
    double s = 0.0;
    for (const Complex& x : u) s += std::norm(x);
    return std::sqrt(s);
}

CVector normalized(const CVector& u) {
    const double n = norm2(u);
    if (n == 0.0) throw std::invalid_argument("normalized: zero vector");
    CVector v = u;
    for (Complex& x : v) x /= n;
    return v;
}

namespace {

// One-sided Jacobi on the columns of a tall matrix. Columns end up
// mutually orthogonal; their norms are the singular values.
std::vector<double> jacobi_singular_values(CMatrix a) {
    const std::size_t n = a.rows();
    const std::size_t k = a.cols();
    const double off_tol = 1e-14;
    const int max_sweeps = 64;

    auto col_inner = [&](std::size_t p, std::size_t q) {
        Complex s = 0.0;
        for (std::size_t r = 0; r < n; ++r) s += std::conj(a(r, p)) * a(r, q);
        return s;
    };

    bool rotated = true;
    for (int sweep = 0; sweep < max_sweeps && rotated; ++sweep) {
        rotated = false;
        for (std::size_t p = 0; p + 1 < k; ++p) {
            for (std::size_t q = p + 1; q < k; ++q) {
                const double app = col_inner(p, p).real();
                const double aqq = col_inner(q, q).real();
                const Complex apq = col_inner(p, q);
                const double m = std::abs(apq);
                if (app == 0.0 || aqq == 0.0) continue;
                if (m <= off_tol * std::sqrt(app * aqq)) continue;
                rotated = true;
                // Unitary 2x2 diagonalization of [[app, apq], [conj(apq), aqq]].
                const Complex u = std::conj(apq) / m;
                const double tau = (aqq - app) / (2.0 * m);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t r = 0; r < n; ++r) {
                    const Complex xp = a(r, p);
                    const Complex xq = a(r, q);
                    a(r, p) = c * xp - s * u * xq;
                    a(r, q) = s * xp + c * u * xq;
                }
            }
        }
    }

    std::vector<double> sv(k);
    for (std::size_t c = 0; c < k; ++c) sv[c] = norm2(a.col(c));
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

}  // namespace

std::vector<double> singular_values(const CMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) throw std::invalid_argument("singular_values: empty matrix");
    return a.rows() >= a.cols() ? jacobi_singular_values(a) : jacobi_singular_values(a.adjoint());
}

int numerical_rank(const std::vector<CVector>& vs, double eps) {
    if (vs.empty()) throw std::invalid_argument("numerical_rank: empty list");
    if (!(eps > 0.0)) throw std::invalid_argument("numerical_rank: eps must be positive");
    const std::size_t dim = vs[0].size();
    for (const CVector& v : vs)
        if (v.size() != dim) throw std::invalid_argument("numerical_rank: inconsistent dimensions");
    CMatrix m(dim, vs.size());
    for (std::size_t c = 0; c < vs.size(); ++c)
        for (std::size_t r = 0; r < dim; ++r) m(r, c) = vs[c][r];
    const std::vector<double> sv = singular_values(m);
    if (sv.empty() || sv[0] == 0.0) return 0;
    int rank = 0;
    for (double s : sv)
        if (s > eps * sv[0]) ++rank;
    return rank;
}

double clamped_arccos(double x) {
    if (std::abs(x) > 1.0 + 1e-12)
        throw std::domain_error("clamped_arccos: argument exceeds [-1,1] beyond tolerance");
    return std::acos(std::clamp(x, -1.0, 1.0));
}

std::vector<double> principal_angles(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("principal_angles: frames must have equal shape");
    if (a.cols() == 0 || a.cols() > a.rows())
        throw std::invalid_argument("principal_angles: need 1 <= k <= n columns");
    const auto check_frame = [](const CMatrix& f) {
        const CMatrix g = f.adjoint() * f;
        for (std::size_t r = 0; r < g.rows(); ++r)
            for (std::size_t c = 0; c < g.cols(); ++c) {
                const Complex want = (r == c) ? Complex{1.0} : Complex{};
                if (std::abs(g(r, c) - want) > 1e-10)
                    throw std::invalid_argument("principal_angles: frame columns not orthonormal");
            }
    };
    check_frame(a);
    check_frame(b);
    std::vector<double> sv = singular_values(a.adjoint() * b);
    std::vector<double> angles(sv.size());
    for (std::size_t i = 0; i < sv.size(); ++i) angles[i] = clamped_arccos(std::min(sv[i], 1.0));
    return angles;  // sv nonincreasing, hence cosines nonincreasing
}

CMatrix orthonormalize_columns(const CMatrix& a) {
    CMatrix q = a;
    const std::size_t n = q.rows(), k = q.cols();
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            Complex proj = 0.0;
            for (std::size_t r = 0; r < n; ++r) proj += std::conj(q(r, i)) * q(r, j);
            for (std::size_t r = 0; r < n; ++r) q(r, j) -= proj * q(r, i);
        }
        double nrm = 0.0;
        for (std::size_t r = 0; r < n; ++r) nrm += std::norm(q(r, j));
        nrm = std::sqrt(nrm);
        if (nrm < 1e-12) throw std::invalid_argument("orthonormalize_columns: rank-deficient input");
        for (std::size_t r = 0; r < n; ++r) q(r, j) /= nrm;
    }
    return q;
}

}  // namespace csgeom
