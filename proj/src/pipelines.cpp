#include "liaset/pipelines.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "liaset/baseline.hpp"
#include "liaset/bitreduce.hpp"
#include "liaset/geometry.hpp"
#include "liaset/ksum.hpp"
#include "liaset/rangeindex.hpp"

namespace liaset {

namespace {

i64 narrow(i128 v, const char* what) {
    if (v < std::numeric_limits<i64>::min() || v > std::numeric_limits<i64>::max())
        throw std::overflow_error(std::string(what) + " exceeds 64 bits");
    return static_cast<i64>(v);
}

// Coefficient dot for a quantifier position the atom may not mention.
i128 pos_dot(const BoundAtom& at, std::size_t pos, const Vec& p) {
    return pos < at.coeffs.size() ? dot(at.coeffs[pos], p) : i128{0};
}

std::size_t count_atom_classes(const Instance& inst) {
    std::set<BoundAtom> reps;
    for (const BoundClause& cl : inst.dnf)
        for (const BoundAtom& at : cl.atoms) reps.insert(std::min(at, negated_atom(at)));
    return reps.size();
}

}  // namespace

// ---- three-inequality normal form -------------------------------------------

std::optional<std::string> ineqdim3_blocker(const Instance& inst) {
    if (inst.k() != 3 || inst.quants[1] != Quant::Forall || inst.quants[2] != Quant::Exists)
        return "pipeline inapplicable: needs a forall-forall-exists or "
               "exists-forall-exists prefix";
    if (std::size_t n = count_atom_classes(inst); n > 3)
        return "pipeline inapplicable: matrix uses " + std::to_string(n) +
               " inequality classes, limit 3";
    return std::nullopt;
}

Dim3Normal dim3_normalize(const Instance& inst) {
    if (auto why = ineqdim3_blocker(inst)) throw std::invalid_argument(*why);

    Dim3Normal out;
    std::map<BoundAtom, std::size_t> klass;
    for (const BoundClause& cl : inst.dnf)
        for (const BoundAtom& at : cl.atoms) {
            BoundAtom rep = std::min(at, negated_atom(at));
            if (klass.emplace(rep, out.reps.size()).second) out.reps.push_back(rep);
        }

    // Co-clause patterns. A clause holding an inequality in both orientations
    // is unsatisfiable and contributes nothing.
    std::set<std::pair<unsigned, unsigned>> pats;
    for (const BoundClause& cl : inst.dnf) {
        unsigned keep = 0, jump = 0;
        for (const BoundAtom& at : cl.atoms) {
            BoundAtom rep = std::min(at, negated_atom(at));
            (at == rep ? keep : jump) |= 1u << klass.at(rep);
        }
        if ((keep & jump) == 0) pats.insert({keep, jump});
    }
    out.patterns.assign(pats.begin(), pats.end());

    auto project = [&](const std::vector<Vec>& points, std::size_t pos) {
        std::set<Vec> distinct;
        for (const Vec& p : points) {
            Vec pr(3, 0);
            for (std::size_t t = 0; t < out.reps.size(); ++t) {
                i128 v = pos == 2 ? pos_dot(out.reps[t], 2, p) - out.reps[t].rhs
                                  : -pos_dot(out.reps[t], pos, p);
                pr[t] = narrow(v, "projection");
            }
            distinct.insert(std::move(pr));
        }
        return std::vector<Vec>(distinct.begin(), distinct.end());
    };
    out.a_proj = project(inst.sets[0], 0);
    out.b_proj = project(inst.sets[1], 1);
    out.c_proj = project(inst.sets[2], 2);

    // Half-side covering every sum |a'[t] + b'[t]| and twice every |c'[t]|,
    // so cube membership and orthant membership coincide on all points seen.
    i128 spread = 0;
    for (std::size_t t = 0; t < 3; ++t) {
        i128 amax = 0, bmax = 0, cmax = 0;
        for (const Vec& p : out.a_proj) amax = std::max<i128>(amax, p[t] < 0 ? -p[t] : p[t]);
        for (const Vec& p : out.b_proj) bmax = std::max<i128>(bmax, p[t] < 0 ? -p[t] : p[t]);
        for (const Vec& p : out.c_proj) cmax = std::max<i128>(cmax, p[t] < 0 ? -p[t] : p[t]);
        spread = std::max(spread, amax + bmax + cmax);
    }
    out.m_bound = std::max<i64>(1, narrow(2 * spread, "cube half-side"));
    return out;
}

// ---- geometric decision -------------------------------------------------------

IneqDim3Report decide_ineqdim3_report(const Instance& inst) {
    Dim3Normal nrm = dim3_normalize(inst);

    IneqDim3Report rep;
    rep.a_count = nrm.a_proj.size();
    rep.b_count = nrm.b_proj.size();
    rep.per_a_family.assign(rep.a_count, 0);
    rep.per_a_index.assign(rep.a_count, 0);

    // One cube per (pattern, c') with duplicates folded; all share one side.
    std::set<Vec> corners;
    for (auto [keep, jump] : nrm.patterns)
        for (const Vec& c : nrm.c_proj) {
            Box cube = orthant_to_cube(keep, jump, c, nrm.m_bound);
            corners.insert(Vec{cube.ivs[0].lo, cube.ivs[1].lo, cube.ivs[2].lo});
        }
    std::vector<Box> boxes;
    if (!corners.empty()) {
        CubeSet cs;
        cs.side = 2 * nrm.m_bound;
        cs.corners.assign(corners.begin(), corners.end());
        boxes = decompose_cubes_3d(cs);
    }

    // Integer closure of each disjoint box, dropping boxes with no lattice
    // point (an open unit interval, say). Disjointness over the reals makes
    // the closures disjoint over Z, so each covered pair lands in one cell.
    std::vector<Vec> cells;
    for (const Box& b : boxes) {
        Vec cell(6);
        bool has_points = true;
        for (std::size_t u = 0; u < 3; ++u) {
            cell[u] = b.ivs[u].lo + (b.ivs[u].lo_open ? 1 : 0);
            cell[3 + u] = b.ivs[u].hi - (b.ivs[u].hi_open ? 1 : 0);
            has_points = has_points && cell[u] <= cell[3 + u];
        }
        if (has_points) cells.push_back(std::move(cell));
    }

    // Direct strategy: range queries over b', translated per a'.
    {
        RangeIndex bidx(nrm.b_proj);
        i128 total = 0;
        for (std::size_t ia = 0; ia < rep.a_count; ++ia) {
            const Vec& ap = nrm.a_proj[ia];
            i128 hits = 0;
            for (const Vec& cell : cells) {
                std::vector<RangeIndex::Range> box(3);
                for (std::size_t u = 0; u < 3; ++u)
                    box[u] = {cell[u] - ap[u], cell[3 + u] - ap[u]};
                hits += bidx.count_in_box(box);
            }
            rep.per_a_index[ia] = narrow(hits, "per-element count");
            total += hits;
        }
        rep.total_index = narrow(total, "incidence count");
    }

    // Reduction strategy: cell membership is six weak inequalities over
    // (a', b', cell), so the triple count is an all-existential counting
    // problem; per-a' figures come from the all-ints counts of each compiled
    // exact-sum instance.
    {
        Instance derived;
        derived.quants = {Quant::Exists, Quant::Exists, Quant::Exists};
        derived.var_names = {"a", "b", "r"};
        derived.set_names = {"Aproj", "Bproj", "Cells"};
        derived.sets = {nrm.a_proj, nrm.b_proj, cells};
        BoundClause membership;
        for (std::size_t u = 0; u < 3; ++u) {
            BoundAtom low;  // a[u] + b[u] - cell_lo[u] >= 0
            low.coeffs = {Vec(3, 0), Vec(3, 0), Vec(6, 0)};
            low.coeffs[0][u] = 1;
            low.coeffs[1][u] = 1;
            low.coeffs[2][u] = -1;
            BoundAtom high;  // cell_hi[u] - a[u] - b[u] >= 0
            high.coeffs = {Vec(3, 0), Vec(3, 0), Vec(6, 0)};
            high.coeffs[0][u] = -1;
            high.coeffs[1][u] = -1;
            high.coeffs[2][3 + u] = 1;
            membership.atoms.push_back(std::move(low));
            membership.atoms.push_back(std::move(high));
        }
        derived.dnf = {membership};

        Family fam = compile_counting(derived);
        rep.total_family = count_family(fam);

        std::vector<i128> acc(rep.a_count, 0);
        for (const FamilyEntry& en : fam.entries) {
            std::vector<u64> per_first = ksum::count_allints_3(en.instance);
            const auto& merged = en.instance.lists[0].values;
            for (std::size_t i = 0; i < en.first_values.size(); ++i) {
                auto it = std::find(merged.begin(), merged.end(), en.first_values[i]);
                acc[i] += i128(en.sign) * i128(per_first[std::size_t(it - merged.begin())]);
            }
        }
        for (std::size_t i = 0; i < rep.a_count; ++i)
            rep.per_a_family[i] = narrow(acc[i], "per-element count");
    }

    if (rep.total_family != rep.total_index || rep.per_a_family != rep.per_a_index)
        throw std::runtime_error("box-incidence strategies disagree");

    if (inst.quants[0] == Quant::Forall) {
        rep.result = rep.total_index == i64(rep.a_count) * i64(rep.b_count);
    } else {
        rep.result = false;
        for (i64 hits : rep.per_a_index)
            rep.result = rep.result || hits == i64(rep.b_count);
    }
    return rep;
}

bool decide_ineqdim3(const Instance& inst) { return decide_ineqdim3_report(inst).result; }

// ---- engine dispatch -----------------------------------------------------------

std::optional<Engine> engine_from_name(std::string_view name) {
    if (name == "brute") return Engine::Brute;
    if (name == "baseline") return Engine::Baseline;
    if (name == "reduction") return Engine::Reduction;
    if (name == "ineqdim3") return Engine::IneqDim3;
    if (name == "auto") return Engine::Auto;
    return std::nullopt;
}

std::string_view engine_name(Engine e) {
    switch (e) {
        case Engine::Brute: return "brute";
        case Engine::Baseline: return "baseline";
        case Engine::Reduction: return "reduction";
        case Engine::IneqDim3: return "ineqdim3";
        case Engine::Auto: return "auto";
    }
    return "?";
}

namespace {

bool all_exists(const Formula& f) {
    for (const QuantSpec& q : f.quants)
        if (q.q != Quant::Exists) return false;
    return !f.quants.empty();
}

void note(std::vector<std::string>* notes, std::string text) {
    if (notes) notes->push_back(std::move(text));
}

[[noreturn]] void throw_inapplicable(Engine e, const std::string& why, const Formula& f,
                                     const Dataset& d) {
    std::string msg = "engine ";
    msg += engine_name(e);
    msg += " inapplicable: ";
    msg += why;
    msg += "; applicable engines:";
    for (Engine ok : applicable_engines(f, d)) {
        msg += ' ';
        msg += engine_name(ok);
    }
    throw std::invalid_argument(msg);
}

bool dispatch_auto(const Formula& f, const Dataset& d, std::vector<std::string>* notes);

// Exactly three quantifiers left.
bool dispatch_triple(const Formula& f, const Dataset& d, std::vector<std::string>* notes) {
    Quant q0 = f.quants[0].q, q1 = f.quants[1].q, q2 = f.quants[2].q;
    if (q0 == q1 && q1 == q2) {
        note(notes, "auto: uniform triple, half-sum tables");
        if (q0 == Quant::Exists) return decide_existential(bind(f, d));
        return !decide_existential(bind(negate_dualize(f), d));
    }
    if (q1 == Quant::Forall && q2 == Quant::Exists) {
        Instance inst = bind(f, d);
        if (auto why = ineqdim3_blocker(inst)) {
            note(notes, "auto: " + *why + "; using the baseline decider");
            return decide_general(f, d);
        }
        note(notes, "auto: trailing forall-exists pair, geometric pipeline");
        return decide_ineqdim3(inst);
    }
    if (q1 == Quant::Exists && q2 == Quant::Forall) {
        note(notes, "auto: dualizing the trailing exists-forall pair");
        return !dispatch_triple(negate_dualize(f), d, notes);
    }
    // forall-exists-exists / exists-forall-forall: peel the lead, then the
    // two-quantifier orthant probes.
    note(notes, "auto: per-element two-quantifier solve");
    return decide_general(f, d);
}

bool dispatch_auto(const Formula& f, const Dataset& d, std::vector<std::string>* notes) {
    std::size_t k = f.quants.size();
    if (k == 0) throw std::invalid_argument("sentence has no quantifiers");
    if (all_exists(f)) {
        note(notes, "auto: all-existential prefix, half-sum tables");
        return decide_existential(bind(f, d));
    }
    if (k <= 2) {
        note(notes, "auto: two-quantifier orthant probes");
        return decide_general(f, d);
    }
    if (k == 3) return dispatch_triple(f, d, notes);

    const QuantSpec& lead = f.quants[0];
    auto it = d.sets.find(lead.set_name);
    if (it == d.sets.end())
        throw std::invalid_argument("dataset has no set named " + lead.set_name);
    note(notes, "auto: peeling " + std::to_string(k - 3) +
                    " leading quantifier(s) by substitution");
    bool want_any = lead.q == Quant::Exists;
    for (const Vec& p : it->second)
        if (dispatch_auto(substitute_var(f, lead.var, p), d, nullptr) == want_any)
            return want_any;
    return !want_any;
}

}  // namespace

std::vector<Engine> applicable_engines(const Formula& f, const Dataset& d) {
    std::vector<Engine> out{Engine::Brute, Engine::Baseline};
    if (all_exists(f)) out.push_back(Engine::Reduction);
    if (!ineqdim3_blocker(bind(f, d))) out.push_back(Engine::IneqDim3);
    out.push_back(Engine::Auto);
    return out;
}

bool decide_dispatch(const Formula& f, const Dataset& d, Engine engine,
                     std::vector<std::string>* notes) {
    switch (engine) {
        case Engine::Brute:
            return brute_decide(bind(f, d));
        case Engine::Baseline:
            return decide_general(f, d);
        case Engine::Reduction: {
            if (!all_exists(f))
                throw_inapplicable(engine, "needs an all-existential prefix", f, d);
            return solve_family(compile_decision(bind(f, d)));
        }
        case Engine::IneqDim3: {
            Instance inst = bind(f, d);
            if (auto why = ineqdim3_blocker(inst)) throw_inapplicable(engine, *why, f, d);
            return decide_ineqdim3(inst);
        }
        case Engine::Auto:
            return dispatch_auto(f, d, notes);
    }
    throw std::logic_error("unknown engine");
}

// ---- built-in problems ----------------------------------------------------------

namespace {

std::size_t uniform_dim(std::initializer_list<const std::vector<Vec>*> sets, const char* who) {
    std::size_t d = 0;
    for (const auto* s : sets)
        for (const Vec& p : *s) {
            if (d == 0) d = p.size();
            if (p.size() != d || d == 0)
                throw std::invalid_argument(std::string(who) +
                                            " sets must share one nonzero dimension");
        }
    return d ? d : 1;
}

std::string coord(const char* var, std::size_t u) {
    return std::string(var) + "[" + std::to_string(u + 1) + "]";
}

std::vector<Vec> scalars(const std::vector<i64>& xs) {
    std::vector<Vec> out;
    out.reserve(xs.size());
    for (i64 x : xs) out.push_back(Vec{x});
    return out;
}

}  // namespace

bool pareto_verify(const std::vector<Vec>& a, const std::vector<Vec>& b,
                   const std::vector<Vec>& c) {
    std::size_t d = uniform_dim({&a, &b, &c}, "pareto");

    bool direct = true;
    RangeIndex cidx(c);
    for (const Vec& pa : a) {
        for (const Vec& pb : b) {
            Vec s(d);
            for (std::size_t u = 0; u < d; ++u)
                s[u] = narrow(i128(pa[u]) + pb[u], "pairwise sum");
            direct = direct && cidx.exists_dominating(s);
            if (!direct) break;
        }
        if (!direct) break;
    }

    std::string body;
    for (std::size_t u = 0; u < d; ++u) {
        if (u) body += " and ";
        body += coord("c", u) + " - " + coord("a", u) + " - " + coord("b", u) + " >= 0";
    }
    Formula f = parse_formula("forall a in A forall b in B exists c in C : " + body);
    Dataset ds;
    ds.sets = {{"A", a}, {"B", b}, {"C", c}};
    if (decide_dispatch(f, ds, Engine::Auto) != direct)
        throw std::runtime_error("pareto verification routes disagree");
    return direct;
}

ParetoCheck pareto_verify_extended(const std::vector<Vec>& a, const std::vector<Vec>& b,
                                   const std::vector<Vec>& c) {
    std::size_t d = uniform_dim({&a, &b, &c}, "pareto");
    ParetoCheck out;
    out.dominance = pareto_verify(a, b, c);

    if (u64(a.size()) * std::max<u64>(b.size(), 1) > sum_cap())
        throw ResourceLimit("pairwise sumset exceeds the sum cap");
    std::set<Vec> sums;
    for (const Vec& pa : a)
        for (const Vec& pb : b) {
            Vec s(d);
            for (std::size_t u = 0; u < d; ++u)
                s[u] = narrow(i128(pa[u]) + pb[u], "pairwise sum");
            sums.insert(std::move(s));
        }
    out.inclusion = true;
    for (const Vec& pc : c) out.inclusion = out.inclusion && sums.count(pc) > 0;

    // Minimality: the distinct values of c form an antichain.
    std::set<Vec> cset(c.begin(), c.end());
    out.minimality = true;
    if (d == 2) {
        // Lexicographic order makes first coordinates nondecreasing, so any
        // earlier point with y below the current one is dominated by it.
        i64 min_y = std::numeric_limits<i64>::max();
        for (const Vec& p : cset) {
            if (min_y <= p[1]) out.minimality = false;
            min_y = std::min(min_y, p[1]);
        }
    } else {
        std::vector<Vec> cd(cset.begin(), cset.end());
        RangeIndex idx(cd);
        for (const Vec& p : cd) {
            std::vector<RangeIndex::Range> box(d);
            for (std::size_t u = 0; u < d; ++u) box[u].lo = p[u];
            if (idx.count_in_box(box) > 1) out.minimality = false;
        }
    }
    return out;
}

std::vector<Vec> pareto_compute(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    std::size_t d = uniform_dim({&a, &b}, "pareto");
    if (u64(a.size()) * std::max<u64>(b.size(), 1) > sum_cap())
        throw ResourceLimit("pairwise sumset exceeds the sum cap");

    std::set<Vec> sums;
    for (const Vec& pa : a)
        for (const Vec& pb : b) {
            Vec s(d);
            for (std::size_t u = 0; u < d; ++u)
                s[u] = narrow(i128(pa[u]) + pb[u], "pairwise sum");
            sums.insert(std::move(s));
        }

    std::vector<Vec> all(sums.begin(), sums.end());
    RangeIndex idx(all);
    std::vector<Vec> front;
    for (const Vec& s : all) {
        std::vector<RangeIndex::Range> box(d);
        for (std::size_t u = 0; u < d; ++u) box[u].lo = s[u];
        if (idx.count_in_box(box) == 1) front.push_back(s);  // only itself above it
    }
    return front;
}

bool hausdorff_n_translations(const std::vector<Vec>& a, const std::vector<Vec>& b,
                              const std::vector<Vec>& c, i64 gamma) {
    if (gamma < 0) throw std::invalid_argument("hausdorff bound must be nonnegative");
    std::size_t d = uniform_dim({&a, &b, &c}, "hausdorff");

    bool direct = false;
    for (const Vec& tau : a) {
        bool tau_ok = true;
        for (const Vec& pb : b) {
            bool close = false;
            for (const Vec& pc : c) {
                i128 dist = 0;
                for (std::size_t u = 0; u < d; ++u) {
                    i128 diff = i128(pb[u]) - pc[u] - tau[u];
                    dist = std::max(dist, diff < 0 ? -diff : diff);
                }
                close = close || dist <= gamma;
            }
            tau_ok = tau_ok && close;
            if (!tau_ok) break;
        }
        direct = direct || tau_ok;
        if (direct) break;
    }

    std::string body;
    for (std::size_t u = 0; u < d; ++u) {
        std::string diff = coord("b", u) + " - " + coord("c", u) + " - " + coord("tau", u);
        if (u) body += " and ";
        body += diff + " <= " + std::to_string(gamma) + " and " + diff +
                " >= " + std::to_string(-gamma);
    }
    Formula f = parse_formula("exists tau in A forall b in B exists c in C : " + body);
    Dataset ds;
    ds.sets = {{"A", a}, {"B", b}, {"C", c}};
    if (decide_dispatch(f, ds, Engine::Auto) != direct)
        throw std::runtime_error("hausdorff routes disagree");
    return direct;
}

bool sumset_approx(const std::vector<i64>& a, const std::vector<i64>& b,
                   const std::vector<i64>& c, i64 t) {
    if (t < 0) throw std::invalid_argument("approximation slack must be nonnegative");

    // c + {0..t} as a sorted union of maximal integer runs.
    std::vector<i64> cs(c);
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    std::vector<std::pair<i64, i64>> runs;
    for (i64 v : cs) {
        i64 hi = narrow(i128(v) + t, "interval end");
        if (!runs.empty() && v <= narrow(i128(runs.back().second) + 1, "interval end"))
            runs.back().second = std::max(runs.back().second, hi);
        else
            runs.emplace_back(v, hi);
    }

    for (i64 x : a)
        for (i64 y : b) {
            i64 s = narrow(i128(x) + y, "pairwise sum");
            auto it = std::upper_bound(runs.begin(), runs.end(), s,
                                       [](i64 q, const auto& r) { return q < r.first; });
            if (it == runs.begin() || s > std::prev(it)->second) return false;
        }
    return true;
}

MaxConvEncodings maxconv_encodings(const std::vector<i64>& a, const std::vector<i64>& b,
                                   const std::vector<i64>& c) {
    if (a.size() != b.size() || b.size() != c.size())
        throw std::invalid_argument("maxconv arrays must share one length");
    const i64 n = i64(a.size());

    i64 mag = 1;
    for (const auto* arr : {&a, &b, &c})
        for (i64 v : *arr) mag = std::max(mag, v < 0 ? -v : v);
    const i64 m = narrow(3 * i128(mag), "padding magnitude");

    MaxConvEncodings out;

    // Violation form: some output index k where every split i+j=k stays
    // strictly below c[k]. Second coordinates carry k, i, and -j so the index
    // equation reads x[2] - y[2] + z[2] = 0. Splits needing j < 0 match a pad
    // row whose -m value keeps the strict inequality true against any c[k];
    // pads use positive second coordinates, so they never shadow a real entry.
    std::vector<Vec> cp, ap, bv;
    for (i64 k = 0; k < n; ++k) cp.push_back(Vec{c[std::size_t(k)], k});
    for (i64 i = 0; i < n; ++i) ap.push_back(Vec{a[std::size_t(i)], i});
    for (i64 j = 0; j < n; ++j) bv.push_back(Vec{b[std::size_t(j)], -j});
    for (i64 jj = 1; jj < n; ++jj) bv.push_back(Vec{-m, jj});
    out.violation = parse_formula(
        "exists x in Cp forall y in Ap exists z in Bp : "
        "x[2] - y[2] + z[2] = 0 and x[1] - y[1] - z[1] >= 1");
    out.violation_data.sets = {{"Cp", cp}, {"Ap", ap}, {"Bp", bv}};

    // Bound form: every output index has a split reaching c[k]. Indices
    // n..2n-2 are realizable by real splits but have no array entry, so they
    // are padded with a -m bound that any split satisfies.
    std::vector<Vec> cq, bq;
    for (i64 k = 0; k < n; ++k) cq.push_back(Vec{c[std::size_t(k)], k});
    for (i64 k = n; k <= 2 * n - 2; ++k) cq.push_back(Vec{-m, k});
    for (i64 j = 0; j < n; ++j) bq.push_back(Vec{b[std::size_t(j)], j});
    out.bound = parse_formula(
        "forall x in Cq exists y in Ap exists z in Bq : "
        "y[2] + z[2] - x[2] = 0 and y[1] + z[1] - x[1] >= 0");
    out.bound_data.sets = {{"Cq", cq}, {"Ap", ap}, {"Bq", bq}};
    return out;
}

bool maxconv_lb(const std::vector<i64>& a, const std::vector<i64>& b,
                const std::vector<i64>& c) {
    MaxConvEncodings enc = maxconv_encodings(a, b, c);
    const std::size_t n = a.size();

    bool direct = true;
    for (std::size_t k = 0; k < n && direct; ++k) {
        i128 best = std::numeric_limits<i64>::min();
        for (std::size_t i = 0; i <= k; ++i)
            best = std::max(best, i128(a[i]) + b[k - i]);
        direct = i128(c[k]) <= best;
    }

    bool no_violation = !decide_dispatch(enc.violation, enc.violation_data, Engine::Auto);
    bool bound_holds = decide_dispatch(enc.bound, enc.bound_data, Engine::Auto);
    if (no_violation != direct || bound_holds != direct)
        throw std::runtime_error("maxconv encodings disagree with the direct evaluation");
    return direct;
}

// ---- classic problem encodings ---------------------------------------------------

Encoding encode_threesum(const std::vector<i64>& a, const std::vector<i64>& b,
                         const std::vector<i64>& c, i64 target) {
    Encoding e;
    e.name = "threesum";
    e.data.sets = {{"A", scalars(a)}, {"B", scalars(b)}, {"C", scalars(c)}};
    e.formula = parse_formula("exists x in A exists y in B exists z in C : "
                              "x[1] + y[1] + z[1] = " +
                              std::to_string(target));
    return e;
}

Encoding encode_ksum(const std::vector<std::vector<i64>>& lists, i64 target) {
    if (lists.empty()) throw std::invalid_argument("ksum needs at least one list");
    Encoding e;
    e.name = "ksum";
    std::string prefix, sum;
    for (std::size_t i = 0; i < lists.size(); ++i) {
        std::string var = "x" + std::to_string(i + 1);
        std::string set = "S" + std::to_string(i + 1);
        prefix += "exists " + var + " in " + set + " ";
        sum += (i ? " + " : "") + var + "[1]";
        e.data.sets.emplace(set, scalars(lists[i]));
    }
    e.formula = parse_formula(prefix + ": " + sum + " = " + std::to_string(target));
    return e;
}

Encoding encode_average_free(const std::vector<i64>& a) {
    Encoding e;
    e.name = "avgfree3";
    e.data.sets = {{"A", scalars(a)}};
    // Holds iff some increasing three-term arithmetic progression exists,
    // i.e. iff the input is NOT 3-average-free.
    e.formula = parse_formula(
        "exists x in A exists y in A exists z in A : "
        "x[1] < y[1] and y[1] < z[1] and x[1] + z[1] = 2*y[1]");
    return e;
}

Encoding encode_conv_threesum(const std::vector<i64>& x) {
    Encoding e;
    e.name = "conv3sum";
    std::vector<Vec> points;
    for (std::size_t i = 0; i < x.size(); ++i) points.push_back(Vec{i64(i), x[i]});
    e.data.sets = {{"P", points}};
    e.formula = parse_formula(
        "exists u in P exists v in P exists w in P : "
        "u[1] + v[1] = w[1] and u[2] + v[2] = w[2]");
    return e;
}

Encoding encode_triangle(const std::vector<std::pair<i64, i64>>& edges) {
    Encoding e;
    e.name = "triangle";
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < edges.size(); ++i)
        rows.push_back(Vec{i64(i), edges[i].first, edges[i].second});
    e.data.sets = {{"E", rows}};
    e.formula = parse_formula(
        "exists e1 in E exists e2 in E exists e3 in E : "
        "e1[3] = e2[2] and e2[3] = e3[2] and e3[3] = e1[2]");
    return e;
}

}  // namespace liaset
