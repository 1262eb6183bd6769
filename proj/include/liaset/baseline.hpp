#pragma once

#include "liaset/dataset.hpp"

namespace liaset {

// Reference deciders. brute_decide/brute_count are the exhaustive ground
// truth; the others trade generality for the meet-in-the-middle and
// index-probe speedups and are validated against the brute pair.

// Short-circuiting recursion over all tuples. Any quantifier pattern.
bool brute_decide(const Instance& inst);

// Number of satisfying tuples. Requires every quantifier existential.
u64 brute_count(const Instance& inst);

// All-existential decision via half-tuple sum tables: enumerate sums of the
// first ceil(k/2) point sets, index them, probe with the remaining half.
// Throws ResourceLimit when a half product exceeds sum_cap().
bool decide_existential(const Instance& inst);

// Two-quantifier decision for any of the four patterns; universal leads are
// handled by per-element orthant probes, trailing universals by dualizing
// the sentence and rebinding.
bool decide_two_quant(const Formula& f, const Dataset& d);

// Any prefix shape: peel leading quantifiers down to two by substitution,
// then defer to decide_two_quant / decide_existential.
bool decide_general(const Formula& f, const Dataset& d);

}  // namespace liaset
