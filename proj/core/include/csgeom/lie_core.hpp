// Copyright 2026 The csgeom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace csgeom {

enum class LieType { A, B, C, D };

char lie_type_char(LieType t);

/// Painted-Dynkin description of a flag manifold G/P together with a
/// dominant weight. `crossed` holds the 1-based indices of the simple
/// roots removed from the Levi subgroup. `weight` holds nonnegative
/// coefficients on the fundamental weights, one per node.
struct FlagSpec {
    LieType type = LieType::A;
    int rank = 1;
    std::vector<int> crossed;
    std::vector<std::int64_t> weight;

    std::string to_string() const;
};

/// Throws std::invalid_argument when the spec is outside the supported
/// ranges (A: rank 1..6, B/C: rank 1..3, D: rank 2..3), when `crossed` is
/// empty or out of range, or when weight coefficients are negative.
void validate_flag_spec(const FlagSpec& spec);

/// True when the weight is supported exactly on the crossed nodes, the
/// setup in which the line bundle is induced from the parabolic.
bool weight_matches_parabolic(const FlagSpec& spec);

/// |W|, computed by breadth-first generation of the group from the simple
/// reflections acting on the full root set.
std::int64_t weyl_order(LieType type, int rank);

/// Order of the subgroup generated by the reflections in the uncrossed
/// simple roots.
std::int64_t levi_weyl_order(const FlagSpec& spec);

/// weyl_order / levi_weyl_order with exact divisibility asserted.
std::int64_t euler_characteristic(const FlagSpec& spec);

/// Number of cosets w . W_Levi inside the explicitly generated group,
/// counted by partitioning the element list; deliberately not computed as
/// a quotient of orders. Equals the number of cells of the Bruhat CW
/// decomposition.
std::int64_t schubert_cell_count(const FlagSpec& spec);

/// Dimension of the irreducible representation with the given highest
/// weight, by the Weyl dimension formula in exact rational arithmetic.
std::int64_t weyl_dimension(const FlagSpec& spec);

}  // namespace csgeom
