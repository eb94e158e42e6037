// Copyright 2026 The csgeom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace csgeom {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Inner-product signature of the ambient space. Lorentz is the
/// (+, -, ..., -) form used by the noncompact disc embedding.
enum class Signature { Definite, Lorentz };

/// Representative vector of a projective ray, tagged with the signature of
/// the ambient form. Nonzero by construction; Lorentz representatives are
/// timelike (positive self-product).
struct EmbeddedVector {
    CVector vec;
    Signature sig = Signature::Definite;

    std::size_t dim() const { return vec.size(); }
};

/// Dense complex matrix, row-major. Sized for desk-scale problems
/// (largest instance in this project is a few hundred rows).
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Complex> data() const { return data_; }
    std::span<Complex> data() { return data_; }

    CMatrix adjoint() const;
    CMatrix conj() const;
    CMatrix transpose() const;
    CVector col(std::size_t c) const;
    CVector row(std::size_t r) const;

    bool operator==(const CMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);

/// Determinant by LU with partial pivoting. Square input required.
Complex determinant(const CMatrix& a);

/// Frobenius norm of the difference.
double frobenius_distance(const CMatrix& a, const CMatrix& b);

/// Sesquilinear form, conjugate-linear in the first argument.
/// Definite: sum conj(u_i) v_i. Lorentz: conj(u_0) v_0 - sum_{i>=1} conj(u_i) v_i.
/// Throws std::invalid_argument on dimension mismatch.
Complex hermitian_inner(const CVector& u, const CVector& v,
                        Signature sig = Signature::Definite);

/// Euclidean 2-norm (Definite signature).
double norm2(const CVector& u);

/// u scaled to unit 2-norm. Throws on the zero vector.
CVector normalized(const CVector& u);

/// All singular values of a, sorted in nonincreasing order, computed by
/// one-sided Jacobi on the tall orientation of the matrix.
std::vector<double> singular_values(const CMatrix& a);

/// Rank of the span of `vs`: number of singular values above eps * sigma_max
/// of the stacked matrix. Returns 0 when every vector is zero.
/// Throws std::invalid_argument on an empty list or eps <= 0.
int numerical_rank(const std::vector<CVector>& vs, double eps = 1e-8);

/// arccos with the argument clamped into [-1, 1]. Arguments farther than
/// 1e-12 outside that interval indicate an upstream normalization bug and
/// throw std::domain_error.
double clamped_arccos(double x);

/// Principal angles between the column spans of two orthonormal frames in
/// C^n, as arccos of the singular values of A^dagger B. Angles are returned
/// with nonincreasing cosines (nondecreasing angles), each in [0, pi/2].
/// Frames must have orthonormal columns to within 1e-10.
std::vector<double> principal_angles(const CMatrix& a, const CMatrix& b);

/// Column-wise modified Gram-Schmidt. Columns must be linearly independent.
CMatrix orthonormalize_columns(const CMatrix& a);

}  // namespace csgeom
