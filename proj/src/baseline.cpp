#include "liaset/baseline.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "liaset/rangeindex.hpp"

namespace liaset {

namespace {

i64 narrow_sum(i128 v) {
    if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
        throw std::overflow_error("projected sums exceed 64-bit range");
    return static_cast<i64>(v);
}

bool matrix_holds(const Instance& inst, const std::vector<const Vec*>& points) {
    for (const BoundClause& clause : inst.dnf) {
        bool ok = true;
        for (const BoundAtom& atom : clause.atoms) {
            if (atom.lhs_value(points) < atom.rhs) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

bool brute_rec(const Instance& inst, std::vector<const Vec*>& points, std::size_t j) {
    if (j == inst.k()) return matrix_holds(inst, points);
    bool want_any = inst.quants[j] == Quant::Exists;
    for (const Vec& p : inst.sets[j]) {
        points[j] = &p;
        if (brute_rec(inst, points, j + 1) == want_any) {
            points[j] = nullptr;
            return want_any;
        }
    }
    points[j] = nullptr;
    return !want_any;  // exhausted: exists fails, forall holds (incl. empty set)
}

// Per-clause projection of one quantifier position: each point becomes its
// m-dimensional contribution vector across the clause's atoms.
std::vector<Vec> project_position(const BoundClause& clause, const Instance& inst,
                                  std::size_t j) {
    std::vector<Vec> out;
    out.reserve(inst.sets[j].size());
    for (const Vec& p : inst.sets[j]) {
        Vec v(clause.atoms.size());
        for (std::size_t i = 0; i < clause.atoms.size(); ++i)
            v[i] = narrow_sum(dot(clause.atoms[i].coeffs[j], p));
        out.push_back(std::move(v));
    }
    return out;
}

Vec clause_rhs(const BoundClause& clause) {
    Vec s(clause.atoms.size());
    for (std::size_t i = 0; i < clause.atoms.size(); ++i) s[i] = clause.atoms[i].rhs;
    return s;
}

// All sums of one projected vector per position in [from, to). Throws when
// the product of set sizes exceeds the sum cap.
std::vector<Vec> sum_combinations(const std::vector<std::vector<Vec>>& proj, std::size_t from,
                                  std::size_t to, std::size_t m) {
    i128 combos = 1;
    for (std::size_t j = from; j < to; ++j) combos *= static_cast<i64>(proj[j].size());
    if (combos > static_cast<i64>(sum_cap()))
        throw ResourceLimit("half-tuple sum enumeration exceeds the sum cap");
    std::vector<Vec> out;
    out.reserve(static_cast<std::size_t>(combos));
    std::vector<std::size_t> idx(to - from, 0);
    if (combos == 0) return out;
    for (;;) {
        Vec sum(m, 0);
        for (std::size_t j = from; j < to; ++j) {
            const Vec& v = proj[j][idx[j - from]];
            for (std::size_t i = 0; i < m; ++i)
                sum[i] = narrow_sum(i128(sum[i]) + v[i]);
        }
        out.push_back(std::move(sum));
        std::size_t carry = 0;
        while (carry < idx.size()) {
            if (++idx[carry] < proj[from + carry].size()) break;
            idx[carry] = 0;
            ++carry;
        }
        if (carry == idx.size()) break;
    }
    return out;
}

}  // namespace

bool brute_decide(const Instance& inst) {
    std::vector<const Vec*> points(inst.k(), nullptr);
    return brute_rec(inst, points, 0);
}

u64 brute_count(const Instance& inst) {
    for (Quant q : inst.quants)
        if (q != Quant::Exists)
            throw std::invalid_argument("counting needs an all-existential prefix");
    u64 total = 0;
    std::vector<const Vec*> points(inst.k(), nullptr);
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == inst.k()) {
            total += matrix_holds(inst, points);
            return;
        }
        for (const Vec& p : inst.sets[j]) {
            points[j] = &p;
            self(self, j + 1);
        }
        points[j] = nullptr;
    };
    rec(rec, 0);
    return total;
}

namespace {

// Odometer over the sums of proj[from..to), one combination at a time; stops
// early when fn returns true. Keeps the larger half of a split out of memory.
template <typename Fn>
bool for_each_half_sum(const std::vector<std::vector<Vec>>& proj, std::size_t from,
                       std::size_t to, std::size_t m, Fn&& fn) {
    i128 combos = 1;
    for (std::size_t j = from; j < to; ++j) combos *= static_cast<i64>(proj[j].size());
    if (combos > static_cast<i64>(sum_cap()))
        throw ResourceLimit("half-tuple sum enumeration exceeds the sum cap");
    if (combos == 0) return false;
    std::vector<std::size_t> idx(to - from, 0);
    Vec sum(m);
    for (;;) {
        std::fill(sum.begin(), sum.end(), 0);
        for (std::size_t j = from; j < to; ++j) {
            const Vec& v = proj[j][idx[j - from]];
            for (std::size_t i = 0; i < m; ++i) sum[i] = narrow_sum(i128(sum[i]) + v[i]);
        }
        if (fn(sum)) return true;
        std::size_t carry = 0;
        while (carry < idx.size()) {
            if (++idx[carry] < proj[from + carry].size()) break;
            idx[carry] = 0;
            ++carry;
        }
        if (carry == idx.size()) return false;
    }
}

}  // namespace

bool decide_existential(const Instance& inst) {
    for (Quant q : inst.quants)
        if (q != Quant::Exists)
            throw std::invalid_argument("decide_existential needs an all-existential prefix");
    for (const auto& s : inst.sets)
        if (s.empty()) return false;
    for (const BoundClause& clause : inst.dnf) {
        if (clause.atoms.empty()) return true;  // tautological co-clause, sets nonempty
        std::size_t m = clause.atoms.size();
        std::vector<std::vector<Vec>> proj(inst.k());
        for (std::size_t j = 0; j < inst.k(); ++j) proj[j] = project_position(clause, inst, j);

        // Index the half with fewer combinations and stream the other one, so
        // memory stays linear in the smaller side whatever the split is.
        std::size_t half = (inst.k() + 1) / 2;
        auto combos = [&](std::size_t from, std::size_t to) {
            i128 c = 1;
            for (std::size_t j = from; j < to; ++j) c *= static_cast<i64>(proj[j].size());
            return c;
        };
        bool table_first = combos(0, half) <= combos(half, inst.k());
        std::size_t tbl_from = table_first ? 0 : half;
        std::size_t tbl_to = table_first ? half : inst.k();
        std::size_t probe_from = table_first ? half : 0;
        std::size_t probe_to = table_first ? inst.k() : half;

        RangeIndex index(sum_combinations(proj, tbl_from, tbl_to, m));
        Vec rhs = clause_rhs(clause);
        Vec need(m);
        bool hit = for_each_half_sum(proj, probe_from, probe_to, m, [&](const Vec& rest) {
            for (std::size_t i = 0; i < m; ++i) need[i] = narrow_sum(i128(rhs[i]) - rest[i]);
            return index.exists_dominating(need);
        });
        if (hit) return true;
    }
    return false;
}

namespace {

// forall a in A exists b in B : dnf. Each a needs some clause with a witness.
bool forall_exists(const Instance& inst) {
    const std::vector<Vec>& a_set = inst.sets[0];
    const std::vector<Vec>& b_set = inst.sets[1];
    if (a_set.empty()) return true;

    struct ClauseProbe {
        std::vector<Vec> a_proj;
        RangeIndex b_index;
        Vec rhs;
    };
    std::vector<ClauseProbe> probes;
    bool has_tautology = false;
    for (const BoundClause& clause : inst.dnf) {
        if (clause.atoms.empty()) {
            has_tautology = true;
            continue;
        }
        ClauseProbe p{project_position(clause, inst, 0),
                      RangeIndex(project_position(clause, inst, 1)), clause_rhs(clause)};
        probes.push_back(std::move(p));
    }
    if (has_tautology && !b_set.empty()) return true;

    for (std::size_t ai = 0; ai < a_set.size(); ++ai) {
        bool satisfied = false;
        for (const ClauseProbe& p : probes) {
            std::size_t m = p.rhs.size();
            Vec need(m);
            for (std::size_t i = 0; i < m; ++i)
                need[i] = narrow_sum(i128(p.rhs[i]) - p.a_proj[ai][i]);
            if (p.b_index.exists_dominating(need)) {
                satisfied = true;
                break;
            }
        }
        if (!satisfied) return false;
    }
    return true;
}

}  // namespace

bool decide_two_quant(const Formula& f, const Dataset& d) {
    if (f.quants.size() != 2)
        throw std::invalid_argument("decide_two_quant needs exactly two quantifiers");
    Quant q0 = f.quants[0].q, q1 = f.quants[1].q;
    if (q0 == Quant::Exists && q1 == Quant::Exists) return decide_existential(bind(f, d));
    if (q0 == Quant::Forall && q1 == Quant::Exists) return forall_exists(bind(f, d));
    // Trailing universal: decide the dualized sentence instead.
    return !decide_two_quant(negate_dualize(f), d);
}

bool decide_general(const Formula& f, const Dataset& d) {
    std::size_t k = f.quants.size();
    if (k == 0) throw std::invalid_argument("sentence has no quantifiers");
    if (k == 2) return decide_two_quant(f, d);
    if (k == 1) {
        if (f.quants[0].q == Quant::Exists) return decide_existential(bind(f, d));
        return !decide_existential(bind(negate_dualize(f), d));
    }
    const QuantSpec& lead = f.quants[0];
    auto it = d.sets.find(lead.set_name);
    if (it == d.sets.end())
        throw std::invalid_argument("dataset has no set named " + lead.set_name);
    bool want_any = lead.q == Quant::Exists;
    for (const Vec& p : it->second) {
        if (decide_general(substitute_var(f, lead.var, p), d) == want_any) return want_any;
    }
    return !want_any;
}

}  // namespace liaset
