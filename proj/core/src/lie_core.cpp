// Copyright 2026 The csgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "csgeom/lie_core.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

namespace csgeom {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using RatVec = std::vector<Rational>;

Rational dot(const RatVec& a, const RatVec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec axpy(const RatVec& x, const Rational& c, const RatVec& y) {
    RatVec r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += c * y[i];
    return r;
}

/// Root data in the standard orthogonal realization. Everything exact.
struct RootDatum {
    int rank;
    int ambient;
    std::vector<RatVec> simple;       // alpha_1 .. alpha_rank
    std::vector<RatVec> positive;     // all positive roots
    std::vector<RatVec> fundamental;  // omega_1 .. omega_rank
    RatVec rho;                       // half-sum of positive roots
};

RatVec basis_vec(int ambient, int i, Rational c = 1) {
    RatVec v(static_cast<std::size_t>(ambient), Rational(0));
    v[static_cast<std::size_t>(i)] = c;
    return v;
}

RootDatum make_root_datum(LieType type, int rank) {
    RootDatum rd;
    rd.rank = rank;
    switch (type) {
        case LieType::A: {
            rd.ambient = rank + 1;
            for (int i = 0; i < rank; ++i) {
                RatVec a(static_cast<std::size_t>(rd.ambient), Rational(0));
                a[i] = 1;
                a[i + 1] = -1;
                rd.simple.push_back(a);
            }
            for (int i = 0; i < rd.ambient; ++i)
                for (int j = i + 1; j < rd.ambient; ++j) {
                    RatVec a(static_cast<std::size_t>(rd.ambient), Rational(0));
                    a[i] = 1;
                    a[j] = -1;
                    rd.positive.push_back(a);
                }
            // omega_k = e_1 + ... + e_k - (k/(rank+1)) sum e_i
            for (int k = 1; k <= rank; ++k) {
                RatVec w(static_cast<std::size_t>(rd.ambient), Rational(0));
                const Rational shift = Rational(k, rank + 1);
                for (int i = 0; i < rd.ambient; ++i) w[i] = (i < k ? 1 : 0) - shift;
                rd.fundamental.push_back(w);
            }
            break;
        }
        case LieType::B: {
            rd.ambient = rank;
            for (int i = 0; i + 1 < rank; ++i) {
                RatVec a = basis_vec(rank, i);
                a[i + 1] = -1;
                rd.simple.push_back(a);
            }
            rd.simple.push_back(basis_vec(rank, rank - 1));
            for (int i = 0; i < rank; ++i) rd.positive.push_back(basis_vec(rank, i));
            for (int i = 0; i < rank; ++i)
                for (int j = i + 1; j < rank; ++j) {
                    RatVec a = basis_vec(rank, i);
                    a[j] = 1;
                    rd.positive.push_back(a);
                    a[j] = -1;
                    rd.positive.push_back(a);
                }
            for (int k = 1; k <= rank; ++k) {
                RatVec w(static_cast<std::size_t>(rank), Rational(0));
                const Rational c = (k == rank) ? Rational(1, 2) : Rational(1);
                for (int i = 0; i < k; ++i) w[i] = c;
                rd.fundamental.push_back(w);
            }
            break;
        }
        case LieType::C: {
            rd.ambient = rank;
            for (int i = 0; i + 1 < rank; ++i) {
                RatVec a = basis_vec(rank, i);
                a[i + 1] = -1;
                rd.simple.push_back(a);
            }
            rd.simple.push_back(basis_vec(rank, rank - 1, 2));
            for (int i = 0; i < rank; ++i) rd.positive.push_back(basis_vec(rank, i, 2));
            for (int i = 0; i < rank; ++i)
                for (int j = i + 1; j < rank; ++j) {
                    RatVec a = basis_vec(rank, i);
                    a[j] = 1;
                    rd.positive.push_back(a);
                    a[j] = -1;
                    rd.positive.push_back(a);
                }
            for (int k = 1; k <= rank; ++k) {
                RatVec w(static_cast<std::size_t>(rank), Rational(0));
                for (int i = 0; i < k; ++i) w[i] = 1;
                rd.fundamental.push_back(w);
            }
            break;
        }
        case LieType::D: {
            rd.ambient = rank;
            for (int i = 0; i + 1 < rank; ++i) {
                RatVec a = basis_vec(rank, i);
                a[i + 1] = -1;
                rd.simple.push_back(a);
            }
            RatVec last = basis_vec(rank, rank - 2);
            last[rank - 1] = 1;
            rd.simple.push_back(last);
            for (int i = 0; i < rank; ++i)
                for (int j = i + 1; j < rank; ++j) {
                    RatVec a = basis_vec(rank, i);
                    a[j] = 1;
                    rd.positive.push_back(a);
                    a[j] = -1;
                    rd.positive.push_back(a);
                }
            for (int k = 1; k <= rank; ++k) {
                RatVec w(static_cast<std::size_t>(rank), Rational(0));
                if (k <= rank - 2) {
                    for (int i = 0; i < k; ++i) w[i] = 1;
                } else if (k == rank - 1) {
                    for (int i = 0; i < rank; ++i) w[i] = Rational(1, 2);
                    w[rank - 1] = Rational(-1, 2);
                } else {
                    for (int i = 0; i < rank; ++i) w[i] = Rational(1, 2);
                }
                rd.fundamental.push_back(w);
            }
            break;
        }
    }
    rd.rho.assign(static_cast<std::size_t>(rd.ambient), Rational(0));
    for (const RatVec& a : rd.positive)
        for (int i = 0; i < rd.ambient; ++i) rd.rho[i] += a[i] / 2;

    // Internal consistency, all exact: (rho, alpha) > 0 on positive roots,
    // <omega_i, alpha_j^vee> = delta_ij, simple roots pairwise non-acute.
    for (const RatVec& a : rd.positive)
        if (dot(rd.rho, a) <= 0) throw std::logic_error("root datum: rho check failed");
    for (int i = 0; i < rd.rank; ++i)
        for (int j = 0; j < rd.rank; ++j) {
            const Rational pairing =
                2 * dot(rd.fundamental[i], rd.simple[j]) / dot(rd.simple[j], rd.simple[j]);
            if (pairing != (i == j ? 1 : 0))
                throw std::logic_error("root datum: fundamental weight check failed");
        }
    for (int i = 0; i < rd.rank; ++i)
        for (int j = i + 1; j < rd.rank; ++j)
            if (dot(rd.simple[i], rd.simple[j]) > 0)
                throw std::logic_error("root datum: simple roots not pairwise obtuse/orthogonal");
    return rd;
}

std::string type_rank_key(LieType t, int rank) {
    return std::string(1, lie_type_char(t)) + std::to_string(rank);
}

void validate_type_rank(LieType type, int rank) {
    switch (type) {
        case LieType::A:
            if (rank < 1 || rank > 6) throw std::invalid_argument("unsupported rank for type A (1..6): " + type_rank_key(type, rank));
            return;
        case LieType::B:
        case LieType::C:
            if (rank < 1 || rank > 3) throw std::invalid_argument("unsupported rank for type B/C (1..3): " + type_rank_key(type, rank));
            return;
        case LieType::D:
            if (rank < 2 || rank > 3) throw std::invalid_argument("unsupported rank for type D (2..3): " + type_rank_key(type, rank));
            return;
    }
    throw std::invalid_argument("unknown Lie type");
}

/// A Weyl element represented by its permutation of the full root list
/// (positive roots followed by their negatives). The action on roots is
/// faithful for the supported types.
using RootPerm = std::vector<std::uint16_t>;

struct PermHash {
    std::size_t operator()(const RootPerm& p) const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (std::uint16_t v : p) {
            h ^= v;
            h *= 0x100000001b3ULL;
        }
        return h;
    }
};

struct WeylGroup {
    std::vector<RootPerm> elements;            // BFS order, identity first
    std::vector<RootPerm> generators;          // one per requested simple root
};

// result = f . g, i.e. result[i] = f[g[i]]
RootPerm compose(const RootPerm& f, const RootPerm& g) {
    RootPerm r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
    return r;
}

/// Generate the subgroup of W spanned by the given simple reflections
/// (0-based indices into the simple-root list) by breadth-first search.
WeylGroup generate_weyl(const RootDatum& rd, const std::vector<int>& simple_indices) {
    std::vector<RatVec> roots = rd.positive;
    for (const RatVec& a : rd.positive) {
        RatVec neg = a;
        for (Rational& x : neg) x = -x;
        roots.push_back(neg);
    }
    std::map<RatVec, std::uint16_t> index_of;
    for (std::size_t i = 0; i < roots.size(); ++i) index_of[roots[i]] = static_cast<std::uint16_t>(i);

    WeylGroup wg;
    for (int si : simple_indices) {
        const RatVec& alpha = rd.simple[static_cast<std::size_t>(si)];
        const Rational alpha2 = dot(alpha, alpha);
        RootPerm perm(roots.size());
        for (std::size_t i = 0; i < roots.size(); ++i) {
            const RatVec image = axpy(roots[i], -2 * dot(roots[i], alpha) / alpha2, alpha);
            const auto it = index_of.find(image);
            if (it == index_of.end()) throw std::logic_error("reflection left the root set");
            perm[i] = it->second;
        }
        wg.generators.push_back(std::move(perm));
    }

    RootPerm id(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) id[i] = static_cast<std::uint16_t>(i);
    std::unordered_set<RootPerm, PermHash> seen;
    seen.insert(id);
    wg.elements.push_back(id);
    std::queue<RootPerm> todo;
    todo.push(id);
    while (!todo.empty()) {
        const RootPerm cur = std::move(todo.front());
        todo.pop();
        for (const RootPerm& g : wg.generators) {
            RootPerm next = compose(cur, g);
            if (seen.insert(next).second) {
                wg.elements.push_back(next);
                todo.push(next);
            }
        }
    }
    return wg;
}

std::vector<int> all_simple_indices(int rank) {
    std::vector<int> v(static_cast<std::size_t>(rank));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

std::vector<int> levi_simple_indices(const FlagSpec& spec) {
    std::vector<int> out;
    for (int i = 1; i <= spec.rank; ++i)
        if (std::find(spec.crossed.begin(), spec.crossed.end(), i) == spec.crossed.end())
            out.push_back(i - 1);
    return out;
}

}  // namespace

char lie_type_char(LieType t) {
    switch (t) {
        case LieType::A: return 'A';
        case LieType::B: return 'B';
        case LieType::C: return 'C';
        case LieType::D: return 'D';
    }
    return '?';
}

std::string FlagSpec::to_string() const {
    std::ostringstream os;
    os << lie_type_char(type) << rank << " crossed={";
    for (std::size_t i = 0; i < crossed.size(); ++i) os << (i ? "," : "") << crossed[i];
    os << "} weight=[";
    for (std::size_t i = 0; i < weight.size(); ++i) os << (i ? "," : "") << weight[i];
    os << "]";
    return os.str();
}

void validate_flag_spec(const FlagSpec& spec) {
    validate_type_rank(spec.type, spec.rank);
    if (spec.crossed.empty())
        throw std::invalid_argument("flag spec: at least one crossed node required");
    std::vector<int> sorted = spec.crossed;
    std::sort(sorted.begin(), sorted.end());
    if (std::unique(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("flag spec: duplicate crossed node");
    if (sorted.front() < 1 || sorted.back() > spec.rank)
        throw std::invalid_argument("flag spec: crossed node out of range");
    if (spec.weight.size() != static_cast<std::size_t>(spec.rank))
        throw std::invalid_argument("flag spec: weight must have one coefficient per node");
    for (std::int64_t c : spec.weight)
        if (c < 0) throw std::invalid_argument("flag spec: negative weight coefficient");
}

bool weight_matches_parabolic(const FlagSpec& spec) {
    validate_flag_spec(spec);
    for (int i = 1; i <= spec.rank; ++i) {
        const bool is_crossed =
            std::find(spec.crossed.begin(), spec.crossed.end(), i) != spec.crossed.end();
        const bool nonzero = spec.weight[static_cast<std::size_t>(i - 1)] != 0;
        if (is_crossed != nonzero) return false;
    }
    return true;
}

std::int64_t weyl_order(LieType type, int rank) {
    validate_type_rank(type, rank);
    const RootDatum rd = make_root_datum(type, rank);
    return static_cast<std::int64_t>(generate_weyl(rd, all_simple_indices(rank)).elements.size());
}

std::int64_t levi_weyl_order(const FlagSpec& spec) {
    validate_flag_spec(spec);
    const RootDatum rd = make_root_datum(spec.type, spec.rank);
    return static_cast<std::int64_t>(generate_weyl(rd, levi_simple_indices(spec)).elements.size());
}

std::int64_t euler_characteristic(const FlagSpec& spec) {
    const std::int64_t w = weyl_order(spec.type, spec.rank);
    const std::int64_t l = levi_weyl_order(spec);
    if (w % l != 0) throw std::logic_error("euler_characteristic: non-divisible group orders");
    return w / l;
}

std::int64_t schubert_cell_count(const FlagSpec& spec) {
    validate_flag_spec(spec);
    const RootDatum rd = make_root_datum(spec.type, spec.rank);
    const WeylGroup full = generate_weyl(rd, all_simple_indices(spec.rank));
    std::vector<RootPerm> levi_gens;
    for (int si : levi_simple_indices(spec))
        levi_gens.push_back(full.generators[static_cast<std::size_t>(si)]);

    std::unordered_map<RootPerm, std::size_t, PermHash> id_of;
    for (std::size_t i = 0; i < full.elements.size(); ++i) id_of[full.elements[i]] = i;

    // Partition the element list into cosets w . W_Levi by flooding with
    // right multiplication.
    std::vector<bool> visited(full.elements.size(), false);
    std::int64_t cosets = 0;
    for (std::size_t i = 0; i < full.elements.size(); ++i) {
        if (visited[i]) continue;
        ++cosets;
        std::queue<std::size_t> todo;
        todo.push(i);
        visited[i] = true;
        while (!todo.empty()) {
            const std::size_t cur = todo.front();
            todo.pop();
            for (const RootPerm& g : levi_gens) {
                const auto it = id_of.find(compose(full.elements[cur], g));
                if (it == id_of.end()) throw std::logic_error("coset walk left the group");
                if (!visited[it->second]) {
                    visited[it->second] = true;
                    todo.push(it->second);
                }
            }
        }
    }
    return cosets;
}

std::int64_t weyl_dimension(const FlagSpec& spec) {
    validate_flag_spec(spec);
    const RootDatum rd = make_root_datum(spec.type, spec.rank);
    RatVec lambda(static_cast<std::size_t>(rd.ambient), Rational(0));
    for (int i = 0; i < spec.rank; ++i)
        lambda = axpy(lambda, Rational(spec.weight[static_cast<std::size_t>(i)]), rd.fundamental[static_cast<std::size_t>(i)]);
    const RatVec lambda_rho = axpy(lambda, Rational(1), rd.rho);
    Rational prod = 1;
    for (const RatVec& a : rd.positive) prod *= dot(lambda_rho, a) / dot(rd.rho, a);
    if (boost::multiprecision::denominator(prod) != 1)
        throw std::logic_error("weyl_dimension: non-integer product");
    const BigInt num = boost::multiprecision::numerator(prod);
    if (num > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("weyl_dimension: result exceeds int64");
    return static_cast<std::int64_t>(num);
}

}  // namespace csgeom
