// Copyright 2026 The csgeom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace csgeom {

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

/// Exponent tuples (a_0, ..., a_{nvars-1}) with sum = degree, enumerated in
/// decreasing lexicographic order. This is the coordinate order of the
/// symmetric-power basis used throughout the embeddings.
inline std::vector<std::vector<int>> monomial_exponents(int nvars, int degree) {
    if (nvars < 1 || degree < 0) throw std::invalid_argument("monomial_exponents: bad arguments");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(nvars), 0);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            cur[var] = remaining;
            out.push_back(cur);
            return;
        }
        for (int a = remaining; a >= 0; --a) {
            cur[var] = a;
            self(self, var + 1, remaining - a);
        }
    };
    rec(rec, 0, degree);
    return out;
}

/// k-element subsets of {0, ..., n-1} in lexicographic order. This is the
/// coordinate order of the exterior-power (minor) basis.
inline std::vector<std::vector<int>> k_subsets(int n, int k) {
    if (k < 0 || n < 0 || k > n) throw std::invalid_argument("k_subsets: bad arguments");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    cur.reserve(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        const int need = k - static_cast<int>(cur.size());
        for (int i = start; i <= n - need; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// m! / prod(a_i!) as an exact integer (desk-scale degrees only).
inline std::uint64_t multinomial(int m, const std::vector<int>& exps) {
    std::uint64_t r = 1;
    int used = 0;
    for (int a : exps) {
        for (int i = 1; i <= a; ++i) {
            r = r * static_cast<std::uint64_t>(++used) / static_cast<std::uint64_t>(i);
        }
    }
    if (used != m) throw std::invalid_argument("multinomial: exponents do not sum to degree");
    return r;
}

}  // namespace csgeom
