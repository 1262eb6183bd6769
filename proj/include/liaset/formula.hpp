#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "liaset/config.hpp"

namespace liaset {

// Quantified linear-arithmetic sentences over named finite sets of integer
// vectors. The surface syntax is
//
//   exists x in A^2 forall y in B : x[1] + y[1] <= 3*x[2] - t and ...
//
// where quantified variables are accessed per coordinate (1-based), bare
// identifiers are free integer scalars, and the matrix is any and/or/not
// combination of linear atoms.

enum class Quant { Exists, Forall };
enum class Rel { Le, Lt, Eq, Ne, Ge, Gt };

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(std::string msg, int line_, int col_)
        : std::runtime_error(std::move(msg)), line(line_), col(col_) {}
};

// One coordinate of one quantified variable, with coefficient.
struct VarCoeff {
    std::string var;
    int coord = 0;  // 0-based internally; surface syntax is 1-based
    i64 coeff = 0;
    auto operator<=>(const VarCoeff&) const = default;
};

// Linear form: sum of variable coordinates, free scalars, and a constant.
struct LinTerm {
    std::vector<VarCoeff> vars;
    std::map<std::string, i64> free;
    i64 constant = 0;

    i128 eval(const std::map<std::string, Vec>& env,
              const std::map<std::string, i64>& free_vals) const;
};

// Atom in folded form: lhs - rhs is stored once, so the atom reads `f rel 0`.
struct Atom {
    LinTerm f;
    Rel rel = Rel::Ge;
};

struct Body;
using BodyPtr = std::shared_ptr<const Body>;

struct Body {
    enum class Kind { Atom, And, Or, Not };
    Kind kind = Kind::Atom;
    Atom atom;                  // Kind::Atom
    std::vector<BodyPtr> kids;  // And/Or: 2+; Not: 1

    static BodyPtr make_atom(Atom a);
    static BodyPtr make_and(std::vector<BodyPtr> kids);
    static BodyPtr make_or(std::vector<BodyPtr> kids);
    static BodyPtr make_not(BodyPtr kid);
};

struct QuantSpec {
    Quant q = Quant::Exists;
    std::string var;
    std::string set_name;
    int declared_dim = 0;  // 0 when the ^d suffix was omitted
};

struct Formula {
    std::vector<QuantSpec> quants;
    BodyPtr body;

    // Highest coordinate index used for `var`, 1-based; 0 if unused.
    int max_coord_used(const std::string& var) const;
};

Formula parse_formula(std::string_view text);
std::string pretty_print(const Formula& f);

// Matrix evaluation under a full assignment of quantified variables and free
// scalars. Throws std::out_of_range on missing names, std::invalid_argument
// on coordinate overflow.
bool eval_body(const BodyPtr& b, const std::map<std::string, Vec>& env,
               const std::map<std::string, i64>& free_vals);

// Fold the given free-scalar values into atom constants. Names not mentioned
// by the formula are ignored; names the formula uses but the map lacks stay
// symbolic.
Formula substitute_free(const Formula& f, const std::map<std::string, i64>& free_vals);

// Replace quantified variable `var` (which must be the formula's first
// quantifier) by a concrete point, dropping that quantifier.
Formula substitute_var(const Formula& f, const std::string& var, const Vec& value);

// Logical negation with quantifiers dualized: NOT (Q1 x1 ... : psi) becomes
// (~Q1 x1 ... : not psi). decide(f) == !decide(negate_dualize(f)).
Formula negate_dualize(const Formula& f);

// All free-scalar names the matrix mentions.
std::vector<std::string> free_names(const Formula& f);

// ---- Normal form ----------------------------------------------------------

// Canonical weak inequality `f >= 0` with integer-tightened, gcd-reduced
// coefficients. Two atoms are semantically equal iff their canonical
// representations compare equal.
struct GeAtom {
    std::vector<VarCoeff> vars;                    // sorted by (var, coord)
    std::vector<std::pair<std::string, i64>> free;  // sorted by name
    i64 constant = 0;
    auto operator<=>(const GeAtom&) const = default;

    // Canonical form of NOT (f >= 0), i.e. -f - 1 >= 0.
    GeAtom negated() const;
};

// Build the canonical GeAtom for `f >= 0`. Returns nullopt when f has no
// variable or free part; *constant_truth then holds the atom's truth value.
struct GeAtomOrConst {
    bool is_const = false;
    bool truth = false;
    GeAtom atom;
};
GeAtomOrConst canonical_ge(const LinTerm& f);

// Conjunction of canonical atoms, sorted and deduplicated.
struct CoClause {
    std::vector<GeAtom> atoms;
    auto operator<=>(const CoClause&) const = default;
};

// Disjunction of co-clauses. No clauses = FALSE; a single empty co-clause =
// TRUE. Tautological atoms are dropped, contradictory or duplicate clauses
// removed.
struct Dnf {
    std::vector<CoClause> clauses;
    bool is_false() const { return clauses.empty(); }
    bool is_true() const { return clauses.size() == 1 && clauses[0].atoms.empty(); }
};

// Normalize a matrix to DNF over weak inequalities. Throws ResourceLimit when
// the clause count would exceed kDnfClauseCap.
Dnf to_dnf(const BodyPtr& body);

// Number of distinct inequalities needed across the matrix, counting an
// inequality and its integer complement (f >= 0 vs -f-1 >= 0) once. Upper
// bounds the figure the three-inequality pipeline gates on.
std::size_t inequality_dimension_upper(const Formula& f);

}  // namespace liaset
