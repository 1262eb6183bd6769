#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liaset/dataset.hpp"

namespace liaset {

// The geometric decision pipeline for matrices built from at most three
// inequalities, the engine dispatcher that routes arbitrary prefixes onto the
// specialized deciders, and the built-in problems expressed on top of them.

// ---- three-inequality normal form -------------------------------------------

// Every atom of the matrix, up to integer complement, is one of at most three
// inequalities
//
//   alpha^T a + beta^T b  <=  gamma^T c + S,
//
// so a co-clause is just a pattern of "<=" / ">= c+1" choices per inequality,
// and the quantified points enter only through three linear projections.
struct Dim3Normal {
    // Canonical representative per inequality class, in first-seen order,
    // oriented as sum_j <coeffs_j, x_j> >= rhs.
    std::vector<BoundAtom> reps;

    // Distinct projections, padded to three coordinates:
    //   a_proj[t] = -<rep_t.coeffs[0], a>
    //   b_proj[t] = -<rep_t.coeffs[1], b>
    //   c_proj[t] =  <rep_t.coeffs[2], c> - rep_t.rhs
    // Representative t holds on (a, b, c) iff a'[t] + b'[t] <= c'[t].
    std::vector<Vec> a_proj, b_proj, c_proj;

    // Satisfiable co-clauses as (keep, jump) bitmask pairs over class indices:
    // bit t in `keep` demands a'[t]+b'[t] <= c'[t], in `jump` the complement
    // a'[t]+b'[t] >= c'[t]+1. Deduplicated.
    std::vector<std::pair<unsigned, unsigned>> patterns;

    // Cube half-side: at least every |a'[t] + b'[t]| and twice every |c'[t]|.
    i64 m_bound = 1;
};

// Throws std::invalid_argument ("pipeline inapplicable: ...") unless the
// prefix is forall-forall-exists or exists-forall-exists and the matrix uses
// at most three inequality classes.
Dim3Normal dim3_normalize(const Instance& inst);

// The reason dim3_normalize would reject, or nullopt when it applies.
std::optional<std::string> ineqdim3_blocker(const Instance& inst);

// Witness-count bookkeeping behind the geometric decision. The covered region
// of the orthant cubes is cut into disjoint boxes, and pairs (a', b') with
// a' + b' inside the region are counted twice: through the exact-sum family
// compiled from the box memberships (six inequalities per box) and through a
// range index over b' translated per a'. The two countings must agree, both
// in total and per distinct a'.
struct IneqDim3Report {
    bool result = false;
    std::size_t a_count = 0;  // distinct a' projections
    std::size_t b_count = 0;  // distinct b' projections
    i64 total_family = 0;     // via compile_counting over the box family
    i64 total_index = 0;      // via per-a' range queries
    std::vector<i64> per_a_family, per_a_index;  // indexed like Dim3Normal::a_proj
};

IneqDim3Report decide_ineqdim3_report(const Instance& inst);

// forall-forall-exists: accept iff every (a', b') pair is covered.
// exists-forall-exists: accept iff some a' is covered against every b'.
bool decide_ineqdim3(const Instance& inst);

// ---- engine dispatch ---------------------------------------------------------

enum class Engine { Brute, Baseline, Reduction, IneqDim3, Auto };

std::optional<Engine> engine_from_name(std::string_view name);
std::string_view engine_name(Engine e);

// Engines able to decide this sentence. Brute, baseline, and auto always
// qualify; reduction needs an all-existential prefix; ineqdim3 needs
// dim3_normalize to accept the bound instance.
std::vector<Engine> applicable_engines(const Formula& f, const Dataset& d);

// Decide under the chosen engine. Auto picks per prefix shape: all-existential
// sentences go to the half-sum tables, two quantifiers to the orthant probes,
// a trailing forall-forall-exists / exists-forall-exists triple with at most
// three inequalities to the geometric pipeline, and anything longer peels
// leading quantifiers by substitution first. Routing decisions are appended to
// `notes` when given. Throws std::invalid_argument when the engine does not
// apply, listing the ones that do.
bool decide_dispatch(const Formula& f, const Dataset& d, Engine engine = Engine::Auto,
                     std::vector<std::string>* notes = nullptr);

// ---- built-in problems -------------------------------------------------------

// Does every pairwise sum a + b have a coordinatewise upper bound in c?
// Decided twice: dominance queries on a range index over c, and the
// forall-forall-exists sentence through decide_dispatch.
bool pareto_verify(const std::vector<Vec>& a, const std::vector<Vec>& b,
                   const std::vector<Vec>& c);

struct ParetoCheck {
    bool inclusion = false;    // every c is an exact pairwise sum
    bool dominance = false;    // pareto_verify
    bool minimality = false;   // no distinct c <= c' coordinatewise
    bool all() const { return inclusion && dominance && minimality; }
};

ParetoCheck pareto_verify_extended(const std::vector<Vec>& a, const std::vector<Vec>& b,
                                   const std::vector<Vec>& c);

// Maximal points of the sumset {a + b}, sorted. The output passes
// pareto_verify_extended on (a, b, result) with all three checks true.
std::vector<Vec> pareto_compute(const std::vector<Vec>& a, const std::vector<Vec>& b);

// Is min over translations tau in a of max_b min_c ||b - (c + tau)||_inf at
// most gamma? Empty b makes the max vacuous (any tau works); empty c makes it
// infinite. Decided as an exists-forall-exists sentence through
// decide_dispatch and cross-checked by the direct triple loop.
bool hausdorff_n_translations(const std::vector<Vec>& a, const std::vector<Vec>& b,
                              const std::vector<Vec>& c, i64 gamma);

// Is {a + b} contained in c + {0..t}? Exact and total: the c-intervals are
// merged into a sorted union and every pairwise sum is binary-searched.
bool sumset_approx(const std::vector<i64>& a, const std::vector<i64>& b,
                   const std::vector<i64>& c, i64 t);

// The two sentence encodings of the max-convolution lower-bound check over
// padded point sets. `violation` is exists-forall-exists and holds iff some
// output index violates the bound; `bound` is forall-exists-exists and holds
// iff every index satisfies it.
struct MaxConvEncodings {
    Formula violation;
    Dataset violation_data;
    Formula bound;
    Dataset bound_data;
};

MaxConvEncodings maxconv_encodings(const std::vector<i64>& a, const std::vector<i64>& b,
                                   const std::vector<i64>& c);

// Does c[k] <= max_{i+j=k} (a[i] + b[j]) hold for every k? Direct quadratic
// evaluation, cross-checked against both encodings through decide_dispatch.
bool maxconv_lb(const std::vector<i64>& a, const std::vector<i64>& b,
                const std::vector<i64>& c);

// ---- classic problem encodings -----------------------------------------------

// A problem rendered as a sentence plus the dataset it quantifies over, ready
// for bind/decide_dispatch.
struct Encoding {
    std::string name;
    Formula formula;
    Dataset data;
};

// One element per list summing to `target`.
Encoding encode_threesum(const std::vector<i64>& a, const std::vector<i64>& b,
                         const std::vector<i64>& c, i64 target = 0);
Encoding encode_ksum(const std::vector<std::vector<i64>>& lists, i64 target);

// Three-term arithmetic progression a1 < a2 < a3 with a1 + a3 = 2*a2; the
// sentence holds iff `a` is NOT 3-average-free.
Encoding encode_average_free(const std::vector<i64>& a);

// x[i] + x[j] = x[i+j], over points (index, value).
Encoding encode_conv_threesum(const std::vector<i64>& x);

// Directed triangle in an edge list, over points (edge id, tail, head).
Encoding encode_triangle(const std::vector<std::pair<i64, i64>>& edges);

}  // namespace liaset
