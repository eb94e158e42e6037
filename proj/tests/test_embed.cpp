// Copyright 2026 The csgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "csgeom/cs_models.hpp"
#include "csgeom/embed.hpp"
#include "csgeom/lie_core.hpp"

using namespace csgeom;

namespace {

ChartPoint cp_point(std::vector<Complex> zs) {
    ChartPoint p(1, zs.size());
    for (std::size_t i = 0; i < zs.size(); ++i) p(0, i) = zs[i];
    return p;
}

ChartPoint scalar_point(Complex z) {
    ChartPoint p(1, 1);
    p(0, 0) = z;
    return p;
}

}  // namespace

TEST_CASE("iota coordinates") {
    const Complex z{0.4, 0.9};
    SUBCASE("degree 1 is the affine chart itself") {
        const EmbeddedVector w = iota(parse_model("cp:n=1,m=1"), cp_point({z}));
        REQUIRE(w.vec.size() == 2);
        CHECK(w.vec[0] == Complex{1.0});
        CHECK(w.vec[1] == z);
    }
    SUBCASE("degree 2 carries the binomial square roots") {
        const EmbeddedVector w = iota(parse_model("cp:n=1,m=2"), cp_point({z}));
        REQUIRE(w.vec.size() == 3);
        CHECK(w.vec[0] == Complex{1.0});
        CHECK(std::abs(w.vec[1] - std::numbers::sqrt2 * z) < 1e-15);
        CHECK(std::abs(w.vec[2] - z * z) < 1e-15);
    }
    SUBCASE("Grassmann origin maps to the first minor") {
        const EmbeddedVector w = iota(parse_model("gr:k=2,n=4"), ChartPoint(2, 2));
        CHECK(w.vec == CVector{1.0, 0.0, 0.0, 0.0, 0.0, 0.0});
    }
    SUBCASE("disc is rejected") {
        CHECK_THROWS_AS(iota(parse_model("disc:twok=1"), scalar_point(0.0)), std::invalid_argument);
    }
}

TEST_CASE("iota_lorentz reproduces the inverse overlap modulus") {
    const Disc d{1};
    const EmbeddedVector w0 = iota_lorentz(d, scalar_point(0.0));
    CHECK(w0.vec == CVector{1.0, 0.0});
    CHECK(w0.sig == Signature::Lorentz);

    const EmbeddedVector w1 = iota_lorentz(d, scalar_point(0.5));
    const double num = std::abs(hermitian_inner(w0.vec, w1.vec, Signature::Lorentz));
    const double den = std::sqrt(hermitian_inner(w0.vec, w0.vec, Signature::Lorentz).real() *
                                 hermitian_inner(w1.vec, w1.vec, Signature::Lorentz).real());
    CHECK(num / den == doctest::Approx(1.0 / std::sqrt(0.75)).epsilon(1e-15));

    const double self = std::abs(hermitian_inner(w1.vec, w1.vec, Signature::Lorentz)) /
                        hermitian_inner(w1.vec, w1.vec, Signature::Lorentz).real();
    CHECK(self == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(iota_lorentz(Disc{2}, scalar_point(0.0)), std::invalid_argument);
}

TEST_CASE("ray distance zoo on fixed ratios") {
    const EmbeddedVector e0{{1.0, 0.0}, Signature::Definite};
    const EmbeddedVector e1{{0.0, 1.0}, Signature::Definite};
    const EmbeddedVector diag{{1.0, 1.0}, Signature::Definite};

    CHECK(cayley_distance(e0, e0) == 0.0);
    CHECK(cayley_distance(e0, e1) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
    CHECK(cayley_distance(e0, diag) == doctest::Approx(std::numbers::pi / 4).epsilon(1e-15));

    CHECK(study_distance(e0, e1) == doctest::Approx(std::numbers::pi).epsilon(1e-15));
    CHECK(study_distance(e0, diag) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
    CHECK(wick_distance(e0, diag) == study_distance(e0, diag));  // bit-identical alias

    CHECK(bargmann_distance(e0, e0) == 0.0);
    CHECK(bargmann_distance(e0, e1) == doctest::Approx(std::numbers::sqrt2).epsilon(1e-15));
    CHECK(bargmann_distance(e0, diag) ==
          doctest::Approx(std::sqrt(2.0 - std::numbers::sqrt2)).epsilon(1e-15));

    const EmbeddedVector lorentz{{1.0, 0.0}, Signature::Lorentz};
    CHECK_THROWS_AS(cayley_distance(lorentz, e0), std::invalid_argument);
}

TEST_CASE("diastasis examples and the polar divergence") {
    const Model cp = parse_model("cp:n=1,m=1");
    CHECK(diastasis(cp, cp_point({0.3}), cp_point({0.3})) == 0.0);
    CHECK(diastasis(cp, cp_point({0.0}), cp_point({1.0})) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));
    // potential path: 0 + log((1-0.25)^-2) - 2 log|1| = -2 log 0.75; agrees
    // with -2 log|overlap| and with the e^(-D/2) cosh(delta) = 1 relation
    CHECK(diastasis(parse_model("disc:twok=2"), scalar_point(0.0), scalar_point(0.5)) ==
          doctest::Approx(-2.0 * std::log(0.75)).epsilon(1e-14));
    CHECK_THROWS_AS(diastasis(cp, cp_point({1.0}), cp_point({-1.0})), std::domain_error);
}

TEST_CASE("pseudo distance matches the kernel closed form") {
    CHECK(pseudo_distance(Disc{1}, scalar_point(0.2), scalar_point(0.2)) == 0.0);
    CHECK(pseudo_distance(Disc{1}, scalar_point(0.0), scalar_point(0.5)) ==
          doctest::Approx(std::acosh(1.0 / std::sqrt(0.75))).epsilon(1e-14));
    CHECK(pseudo_distance(Disc{2}, scalar_point(0.0), scalar_point(0.5)) ==
          doctest::Approx(std::acosh(1.0 / 0.75)).epsilon(1e-14));
}

TEST_CASE("differential rank equals the chart dimension") {
    RngStream rng(31, 0);
    CHECK(differential_rank(parse_model("cp:n=1,m=3"),
                            sample_point(parse_model("cp:n=1,m=3"), rng)) == 1);
    CHECK(differential_rank(parse_model("gr:k=2,n=4"), ChartPoint(2, 2)) == 4);
    CHECK(differential_rank(parse_model("cp:n=2,m=1"),
                            sample_point(parse_model("cp:n=2,m=1"), rng)) == 2);
}

TEST_CASE("ray geodesic endpoints, midpoint additivity, and rejections") {
    RngStream rng(37, 0);
    CVector a(4), b(4);
    for (Complex& x : a) x = rng.complex_gaussian();
    for (Complex& x : b) x = rng.complex_gaussian();
    const EmbeddedVector w1{normalized(a), Signature::Definite};
    const EmbeddedVector w2{normalized(b), Signature::Definite};

    CHECK(cayley_distance(ray_geodesic_point(w1, w2, 0.0), w1) < 1e-12);
    CHECK(cayley_distance(ray_geodesic_point(w1, w2, 1.0), w2) < 1e-12);

    const EmbeddedVector mid = ray_geodesic_point(w1, w2, 0.5);
    const double rho = wick_distance(w1, w2);
    CHECK(wick_distance(w1, mid) == doctest::Approx(rho / 2).epsilon(1e-12));
    CHECK(wick_distance(mid, w2) == doctest::Approx(rho / 2).epsilon(1e-12));
    CHECK(norm2(mid.vec) == doctest::Approx(1.0).epsilon(1e-14));

    const EmbeddedVector e0{{1.0, 0.0}, Signature::Definite};
    const EmbeddedVector e1{{0.0, 1.0}, Signature::Definite};
    CHECK_THROWS_AS(ray_geodesic_point(e0, e1, 0.5), std::invalid_argument);  // orthogonal
    CHECK_THROWS_AS(ray_geodesic_point(e0, e0, 0.5), std::invalid_argument);  // coincident
}

TEST_CASE("overlap equals the normalized section inner product on random pairs") {
    for (const char* name : {"cp:n=1,m=3", "cp:n=2,m=2", "gr:k=2,n=4", "gr:k=2,n=5"}) {
        const Model model = parse_model(name);
        for (int i = 0; i < 200; ++i) {
            RngStream rng(41, static_cast<std::uint64_t>(i));
            const ChartPoint z1 = sample_point(model, rng);
            const ChartPoint z2 = sample_point(model, rng);
            const EmbeddedVector w1 = iota(model, z1);
            const EmbeddedVector w2 = iota(model, z2);
            const Complex two_path =
                hermitian_inner(w1.vec, w2.vec) / (norm2(w1.vec) * norm2(w2.vec));
            CHECK(std::abs(overlap(model, z1, z2) - two_path) < 1e-10);
        }
    }
}

TEST_CASE("section counts match the Weyl dimension of the matched flag") {
    for (const char* name : {"cp:n=1,m=1", "cp:n=1,m=4", "cp:n=3,m=2", "gr:k=2,n=4", "gr:k=3,n=6"}) {
        const Model model = parse_model(name);
        CHECK(static_cast<std::int64_t>(section_count(model)) ==
              weyl_dimension(flag_spec_for(model)));
        CHECK(section_count(model) == embedding_dim(model));
    }
}
