#pragma once

#include <map>
#include <string>
#include <vector>

#include "liaset/config.hpp"
#include "liaset/formula.hpp"

namespace liaset {

// Named finite sets of integer points plus values for free scalars.
// JSON shape: {"sets": {"A": [[1,2], ...]}, "free": {"t": 3}, "universe": 10}.
// `universe` bounds |coordinate| over all sets; 0 means "derive from data".
// Duplicate points are meaningful (multiplicity) and preserved.
struct Dataset {
    std::map<std::string, std::vector<Vec>> sets;
    std::map<std::string, i64> free;
    i64 universe = 0;

    i64 effective_universe() const;
};

Dataset dataset_from_json(const std::string& text);
std::string dataset_to_json(const Dataset& d);  // deterministic: sorted keys, compact
Dataset load_dataset(const std::string& path);
void save_dataset(const Dataset& d, const std::string& path);

inline i128 dot(const Vec& coeffs, const Vec& point) {
    i128 acc = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) acc += i128(coeffs[i]) * point[i];
    return acc;
}

// ---- Bound instances -------------------------------------------------------

// One normalized inequality with coefficients resolved against quantifier
// positions: sum_j <coeffs[j], a_j> >= rhs.
struct BoundAtom {
    std::vector<Vec> coeffs;
    i64 rhs = 0;

    auto operator<=>(const BoundAtom&) const = default;

    i128 lhs_value(const std::vector<const Vec*>& points) const {
        i128 acc = 0;
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            if (points[j]) acc += dot(coeffs[j], *points[j]);
        return acc;
    }
};

// Integer complement: not(L >= S) <=> -L >= 1 - S.
inline BoundAtom negated_atom(const BoundAtom& a) {
    BoundAtom out;
    out.coeffs = a.coeffs;
    for (Vec& c : out.coeffs)
        for (i64& v : c) v = -v;
    out.rhs = 1 - a.rhs;
    return out;
}

struct BoundClause {
    std::vector<BoundAtom> atoms;
};

// A sentence tied to concrete data: free scalars folded in, matrix in
// disjunctive normal form over weak inequalities, one point list per
// quantifier. No clauses = FALSE; a single atomless clause = TRUE.
struct Instance {
    std::vector<Quant> quants;
    std::vector<std::string> var_names;
    std::vector<std::string> set_names;
    std::vector<std::vector<Vec>> sets;
    std::vector<BoundClause> dnf;

    std::size_t k() const { return quants.size(); }
    bool matrix_true() const { return dnf.size() == 1 && dnf[0].atoms.empty(); }
    bool matrix_false() const { return dnf.empty(); }
};

// Validates set presence, dimensions, and free-scalar coverage, then
// normalizes. Throws std::invalid_argument on any mismatch, ResourceLimit if
// normalization blows the clause cap.
Instance bind(const Formula& f, const Dataset& d);

}  // namespace liaset
