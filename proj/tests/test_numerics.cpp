// Copyright 2026 The csgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "csgeom/numerics.hpp"
#include "csgeom/rng.hpp"

using namespace csgeom;

namespace {

CVector rand_vec(int dim, RngStream& rng) {
    CVector v(static_cast<std::size_t>(dim));
    for (Complex& x : v) x = rng.complex_gaussian();
    return v;
}

// Independent rank oracle for dimension 3: a set spans C^3 iff some triple
// has a 3x3 determinant bounded away from zero.
double max_triple_det(const std::vector<CVector>& vs) {
    double best = 0.0;
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            for (std::size_t c = b + 1; c < vs.size(); ++c) {
                CMatrix m(3, 3);
                for (int r = 0; r < 3; ++r) {
                    m(static_cast<std::size_t>(r), 0) = vs[a][static_cast<std::size_t>(r)];
                    m(static_cast<std::size_t>(r), 1) = vs[b][static_cast<std::size_t>(r)];
                    m(static_cast<std::size_t>(r), 2) = vs[c][static_cast<std::size_t>(r)];
                }
                best = std::max(best, std::abs(determinant(m)));
            }
    return best;
}

}  // namespace

TEST_CASE("hermitian_inner examples and symmetry") {
    CHECK(hermitian_inner({1.0, 0.0}, {0.0, 1.0}) == Complex{0.0});
    CHECK(hermitian_inner({1.0, 0.0}, {1.0, 0.0}, Signature::Lorentz) == Complex{1.0});
    CHECK(hermitian_inner({1.0, 1.0}, {1.0, -1.0}) == Complex{0.0});
    CHECK_THROWS_AS(hermitian_inner({1.0}, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(hermitian_inner({1.0}, {1.0}, Signature::Lorentz), std::invalid_argument);

    RngStream rng(1, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const CVector u = rand_vec(4, rng);
        const CVector v = rand_vec(4, rng);
        for (Signature sig : {Signature::Definite, Signature::Lorentz}) {
            const Complex a = hermitian_inner(u, v, sig);
            const Complex b = hermitian_inner(v, u, sig);
            CHECK(std::abs(a - std::conj(b)) < 1e-13);
        }
    }
}

TEST_CASE("Cauchy-Schwarz slack is nonnegative up to roundoff") {
    RngStream rng(2, 0);
    for (int trial = 0; trial < 500; ++trial) {
        const CVector u = rand_vec(5, rng);
        const CVector v = rand_vec(5, rng);
        const double lhs = std::norm(hermitian_inner(u, v));
        const double rhs = hermitian_inner(u, u).real() * hermitian_inner(v, v).real();
        CHECK(rhs - lhs >= -1e-12 * rhs);
    }
}

TEST_CASE("numerical_rank on frozen examples") {
    CHECK(numerical_rank({{1.0, 0.0}, {0.0, 1.0}}, 1e-8) == 2);
    CHECK(numerical_rank({{1.0, 0.0}, {2.0, 0.0}}, 1e-8) == 1);
    CHECK(numerical_rank({{0.0, 0.0}, {0.0, 0.0}}, 1e-8) == 0);
    CHECK_THROWS_AS(numerical_rank({}, 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(numerical_rank({{1.0}}, -1.0), std::invalid_argument);
}

TEST_CASE("numerical_rank of generic vectors in C^3 agrees with the determinant oracle") {
    RngStream rng(3, 0);
    std::vector<CVector> vs;
    for (int i = 0; i < 20; ++i) vs.push_back(rand_vec(3, rng));
    REQUIRE(max_triple_det(vs) > 1e-3);  // generic: full rank per the oracle
    CHECK(numerical_rank(vs, 1e-8) == 3);
}

TEST_CASE("numerical_rank is invariant under unitary mixing") {
    RngStream rng(4, 0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<CVector> vs;
        const int count = 6;
        for (int i = 0; i < count; ++i) vs.push_back(rand_vec(4, rng));
        // deliberately include a dependent vector
        vs.push_back(vs[0]);
        const int before = numerical_rank(vs);

        CMatrix g(vs.size(), vs.size());
        for (Complex& x : g.data()) x = rng.complex_gaussian();
        const CMatrix u = orthonormalize_columns(g);
        std::vector<CVector> mixed(vs.size(), CVector(4));
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = 0; j < vs.size(); ++j)
                for (std::size_t d = 0; d < 4; ++d) mixed[i][d] += u(i, j) * vs[j][d];
        CHECK(numerical_rank(mixed) == before);
    }
}

TEST_CASE("clamped_arccos endpoints and clamping") {
    CHECK(clamped_arccos(1.0) == 0.0);
    CHECK(clamped_arccos(0.0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
    CHECK(clamped_arccos(1.0 + 5e-13) == 0.0);
    CHECK_THROWS_AS(clamped_arccos(1.0 + 1e-11), std::domain_error);
    CHECK_THROWS_AS(clamped_arccos(-1.5), std::domain_error);
}

TEST_CASE("principal angles of identical and orthogonal planes") {
    CMatrix a(4, 2);
    a(0, 0) = 1.0;
    a(1, 1) = 1.0;
    SUBCASE("identical frames give zero angles") {
        const auto theta = principal_angles(a, a);
        REQUIRE(theta.size() == 2);
        CHECK(theta[0] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(theta[1] == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("fully orthogonal planes give pi/2 twice") {
        CMatrix b(4, 2);
        b(2, 0) = 1.0;
        b(3, 1) = 1.0;
        const auto theta = principal_angles(a, b);
        CHECK(theta[0] == doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
        CHECK(theta[1] == doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
    }
    SUBCASE("non-orthonormal frames are rejected") {
        CMatrix bad = a;
        bad(0, 0) = 2.0;
        CHECK_THROWS_AS(principal_angles(bad, a), std::invalid_argument);
    }
}

TEST_CASE("singular values match a hand case and are nonincreasing") {
    // diag(3, 2) embedded in a 3x2 matrix
    CMatrix m(3, 2);
    m(0, 0) = 3.0;
    m(1, 1) = 2.0;
    const auto sv = singular_values(m);
    REQUIRE(sv.size() == 2);
    CHECK(sv[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(sv[1] == doctest::Approx(2.0).epsilon(1e-14));

    RngStream rng(5, 0);
    CMatrix r(6, 4);
    for (Complex& x : r.data()) x = rng.complex_gaussian();
    const auto rv = singular_values(r);
    for (std::size_t i = 0; i + 1 < rv.size(); ++i) CHECK(rv[i] >= rv[i + 1]);
    // wide orientation gives the same spectrum
    const auto rv2 = singular_values(r.adjoint());
    for (std::size_t i = 0; i < rv.size(); ++i)
        CHECK(rv[i] == doctest::Approx(rv2[i]).epsilon(1e-12));
}

TEST_CASE("rng streams are reproducible and order-independent") {
    RngStream a(42, 7), b(42, 7), c(42, 8);
    CHECK(a.uniform01() == b.uniform01());
    CHECK(a.gaussian() == b.gaussian());
    CHECK(a.uniform01() != c.uniform01());
}
