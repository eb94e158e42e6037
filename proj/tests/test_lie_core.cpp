// Copyright 2026 The csgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdint>

#include <doctest.h>

#include "csgeom/combinatorics.hpp"
#include "csgeom/lie_core.hpp"

using namespace csgeom;

namespace {

// Closed-form Weyl group orders, the oracle for the generated groups.
std::int64_t factorial(int n) {
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::int64_t weyl_order_oracle(LieType t, int rank) {
    switch (t) {
        case LieType::A: return factorial(rank + 1);
        case LieType::B:
        case LieType::C: return (std::int64_t{1} << rank) * factorial(rank);
        case LieType::D: return (std::int64_t{1} << (rank - 1)) * factorial(rank);
    }
    return 0;
}

FlagSpec make_spec(LieType t, int rank, std::vector<int> crossed, std::vector<std::int64_t> weight) {
    FlagSpec s;
    s.type = t;
    s.rank = rank;
    s.crossed = std::move(crossed);
    s.weight = std::move(weight);
    return s;
}

}  // namespace

TEST_CASE("weyl_order matches the closed-form oracle on all supported groups") {
    CHECK(weyl_order(LieType::A, 1) == 2);
    CHECK(weyl_order(LieType::A, 2) == 6);
    CHECK(weyl_order(LieType::B, 2) == 8);
    for (int r = 1; r <= 6; ++r) CHECK(weyl_order(LieType::A, r) == weyl_order_oracle(LieType::A, r));
    for (int r = 1; r <= 3; ++r) {
        CHECK(weyl_order(LieType::B, r) == weyl_order_oracle(LieType::B, r));
        CHECK(weyl_order(LieType::C, r) == weyl_order_oracle(LieType::C, r));
    }
    for (int r = 2; r <= 3; ++r) CHECK(weyl_order(LieType::D, r) == weyl_order_oracle(LieType::D, r));
    CHECK_THROWS_AS(weyl_order(LieType::A, 7), std::invalid_argument);
    CHECK_THROWS_AS(weyl_order(LieType::D, 1), std::invalid_argument);
    CHECK_THROWS_AS(weyl_order(LieType::B, 0), std::invalid_argument);
}

TEST_CASE("levi_weyl_order on painted diagrams") {
    CHECK(levi_weyl_order(make_spec(LieType::A, 1, {1}, {1})) == 1);
    // A3 with the middle node crossed leaves A1 x A1
    CHECK(levi_weyl_order(make_spec(LieType::A, 3, {2}, {0, 1, 0})) == 4);
    // full flag of A2
    CHECK(levi_weyl_order(make_spec(LieType::A, 2, {1, 2}, {1, 1})) == 1);
}

TEST_CASE("euler_characteristic frozen values") {
    CHECK(euler_characteristic(make_spec(LieType::A, 1, {1}, {1})) == 2);
    CHECK(euler_characteristic(make_spec(LieType::A, 3, {2}, {0, 1, 0})) == 6);
    CHECK(euler_characteristic(make_spec(LieType::A, 2, {1, 2}, {1, 1})) == 6);
}

TEST_CASE("schubert_cell_count by coset partition") {
    CHECK(schubert_cell_count(make_spec(LieType::A, 1, {1}, {1})) == 2);
    CHECK(schubert_cell_count(make_spec(LieType::A, 3, {2}, {0, 1, 0})) == 6);
    for (int n = 1; n <= 6; ++n) {
        std::vector<std::int64_t> w(static_cast<std::size_t>(n), 0);
        w[0] = 1;
        CHECK(schubert_cell_count(make_spec(LieType::A, n, {1}, w)) == n + 1);
    }
}

TEST_CASE("euler_characteristic equals schubert_cell_count across the supported range") {
    auto sweep = [](LieType t, int lo, int hi) {
        for (int rank = lo; rank <= hi; ++rank)
            for (int node = 1; node <= rank; ++node) {
                std::vector<std::int64_t> w(static_cast<std::size_t>(rank), 0);
                w[static_cast<std::size_t>(node - 1)] = 1;
                const FlagSpec s = make_spec(t, rank, {node}, w);
                const auto chi = euler_characteristic(s);
                CHECK(chi == schubert_cell_count(s));
                CHECK(chi > 0);
            }
    };
    sweep(LieType::A, 1, 6);
    sweep(LieType::B, 1, 3);
    sweep(LieType::C, 1, 3);
    sweep(LieType::D, 2, 3);

    // a few multiply-crossed diagrams as well
    const FlagSpec full_a3 = make_spec(LieType::A, 3, {1, 2, 3}, {1, 1, 1});
    CHECK(euler_characteristic(full_a3) == schubert_cell_count(full_a3));
    const FlagSpec b3_two = make_spec(LieType::B, 3, {1, 3}, {1, 0, 1});
    CHECK(euler_characteristic(b3_two) == schubert_cell_count(b3_two));
}

TEST_CASE("weyl_dimension frozen examples") {
    CHECK(weyl_dimension(make_spec(LieType::A, 1, {1}, {1})) == 2);
    CHECK(weyl_dimension(make_spec(LieType::A, 3, {2}, {0, 1, 0})) == 6);  // C(4,2)
    // A2 with weight rho: (p+1)(q+1)(p+q+2)/2 = 8, deliberately != chi = 6
    CHECK(weyl_dimension(make_spec(LieType::A, 2, {1, 2}, {1, 1})) == 8);
    CHECK(euler_characteristic(make_spec(LieType::A, 2, {1, 2}, {1, 1})) == 6);
}

TEST_CASE("weyl_dimension of symmetric and exterior powers matches binomial counts") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) {
            std::vector<std::int64_t> w(static_cast<std::size_t>(n), 0);
            w[0] = m;
            CHECK(weyl_dimension(make_spec(LieType::A, n, {1}, w)) ==
                  static_cast<std::int64_t>(binomial(n + m, m)));
        }
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            std::vector<std::int64_t> w(static_cast<std::size_t>(n), 0);
            w[static_cast<std::size_t>(k - 1)] = 1;
            CHECK(weyl_dimension(make_spec(LieType::A, n, {k}, w)) ==
                  static_cast<std::int64_t>(binomial(n + 1, k)));
        }
}

TEST_CASE("flag spec validation") {
    CHECK_THROWS_AS(validate_flag_spec(make_spec(LieType::A, 3, {}, {0, 0, 0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_flag_spec(make_spec(LieType::A, 3, {4}, {0, 0, 0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_flag_spec(make_spec(LieType::A, 3, {1, 1}, {1, 0, 0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_flag_spec(make_spec(LieType::A, 3, {1}, {1, 0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_flag_spec(make_spec(LieType::A, 3, {1}, {-1, 0, 0})),
                    std::invalid_argument);

    CHECK(weight_matches_parabolic(make_spec(LieType::A, 3, {2}, {0, 1, 0})));
    CHECK(weight_matches_parabolic(make_spec(LieType::A, 3, {2}, {0, 5, 0})));
    CHECK_FALSE(weight_matches_parabolic(make_spec(LieType::A, 3, {2}, {1, 1, 0})));
    CHECK_FALSE(weight_matches_parabolic(make_spec(LieType::A, 3, {2}, {0, 0, 0})));
}
