#pragma once

#include <optional>

#include "liaset/dataset.hpp"
#include "liaset/ksum.hpp"

namespace liaset {

// Compilation of bound all-existential sentences into families of exact-sum
// instances. Each inequality is turned into a family of prefix-sum equalities
// over guessed bit levels and slacks; a satisfying tuple matches exactly one
// guess per inequality, so decision is an OR over the family and counting is
// exact after inclusion-exclusion over co-clauses.

// High `level` bits of a `bit_length`-bit value: v >> (bit_length - level).
inline u64 prefix_bits(u64 v, int bit_length, int level) {
    return v >> (bit_length - level);
}

// The certificate of sum_i x_i > z at the first bit level where the prefix
// sums cross: level is minimal with sum_i pre(x_i) >= pre(z) + 1. There
//   b = sum_i pre_level(x_i) - pre_level(z)      in [1, k], and
//   e = sum_i pre_{level-1}(x_i) - pre_{level-1}(z)  in [-(k-1)/2, 0].
// Doubling gives D_{l+1} >= 2*D_l - 1, so once the walk reaches 1 it stays
// positive: the (level, b, e) triple exists iff sum x > z, and then exactly
// one level satisfies D_{level-1} <= 0 < D_level. Note e = 0 need not hold at
// the crossing for three or more summands; the walk can jump from -1 past 0.
struct CrossingCert {
    int level = 0;
    i64 b = 0;
    i64 e = 0;
    auto operator<=>(const CrossingCert&) const = default;
};

// All inputs must fit in bit_length bits. Returns the crossing certificate,
// or nullopt when sum x_i <= z.
std::optional<CrossingCert> find_unique_lb(const std::vector<u64>& xs, u64 z, int bit_length);

// Per-clause shift from inequalities over raw projections to strict
// dominance over nonnegative values:
//   x_{i,j}(a) = shift + <coeffs_{i,j}, a>   in [1, 2*shift - 1]
//   z_i        = rhs_i - 1 + k*shift
// so that atom i holds for a tuple iff sum_j x_{i,j}(a_j) > z_i, with every
// quantity inside `bits` bits.
struct EqualityMaps {
    i64 shift = 1;
    int bits = 1;
    std::vector<i64> z;                // per atom
    std::vector<std::vector<Vec>> x;   // x[position][element][atom]
};
EqualityMaps ineq_to_eq_maps(const BoundClause& clause,
                             const std::vector<std::vector<Vec>>& sets);

// Vector-valued exact-sum instance: one value list per position, a target,
// componentwise sum equality as the witness predicate.
struct VectorInstance {
    std::vector<std::vector<Vec>> lists;
    Vec target;
};

// Digit-pack a vector instance into scalars so that k values sum to the
// encoded target iff the vectors summed to the vector target componentwise.
// Base 2k*U+1 with U = max |component|; list values shift each digit by k*U,
// the target by k^2*U, leaving no digit interaction between components.
// merge_duplicates folds repeated vectors into multiplicities (counting);
// otherwise duplicates collapse to a single multiplicity-1 value (decision).
// first_encodings, when given, receives the encoded position-0 values in
// their original element order, before any merging.
ksum::KsumInstance<BigInt> encode_vector_instance(const VectorInstance& vi,
                                                  bool merge_duplicates,
                                                  std::vector<BigInt>* first_encodings = nullptr);

// One exact-sum instance per achieved certificate guess.
struct FamilyEntry {
    std::size_t group = 0;      // co-clause index / inclusion-exclusion subset mask
    int sign = 1;               // counting: (-1)^(|subset|+1)
    std::vector<int> levels;    // per atom: guessed crossing level
    std::vector<i64> w;         // per atom: level slack b
    std::vector<i64> e;         // per atom: level-1 slack (counting only)
    ksum::KsumInstance<BigInt> instance;
    std::vector<BigInt> first_values;  // counting: encoded value of each
                                       // position-0 element, original order
};

struct Family {
    std::size_t k = 0;
    bool trivially_true = false;  // decision: tautological matrix, no empty set
    std::vector<FamilyEntry> entries;
};

// Decision compilation (all-existential): the sentence holds iff
// trivially_true or some entry's instance is solvable. Certificates carry
// only the crossing level and its slack; that single equality is already
// sound for the strict comparison, and the guess grid per co-clause stays
// within (bits * k)^m entries.
Family compile_decision(const Instance& inst);

// Counting compilation (all-existential): satisfying tuples =
// sum over entries of sign * weighted witness count. Certificates carry the
// crossing level plus both slacks, which pins exactly one guess per
// satisfying tuple; co-clause overlaps cancel via inclusion-exclusion.
Family compile_counting(const Instance& inst);

bool solve_family(const Family& family);
i64 count_family(const Family& family);

}  // namespace liaset
