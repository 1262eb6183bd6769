#include "liaset/bitreduce.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

namespace liaset {
namespace {

i64 narrow(i128 v, const char* what) {
    if (v < std::numeric_limits<i64>::min() || v > std::numeric_limits<i64>::max())
        throw std::overflow_error(std::string(what) + " exceeds 64 bits");
    return static_cast<i64>(v);
}

void require_existential(const Instance& inst, const char* who) {
    for (Quant q : inst.quants)
        if (q != Quant::Exists)
            throw std::invalid_argument(std::string(who) + " needs an all-existential prefix");
}

// Flattened per-element prefix table: entry [i * (bits + 1) + l] is the
// l-level prefix of the shifted atom-i value, l in 0..bits. Certificates only
// ever compare sums of these tables against the matching table for z.
Vec prefix_table(const Vec& shifted, int bits) {
    Vec out(shifted.size() * (bits + 1));
    for (std::size_t i = 0; i < shifted.size(); ++i) {
        auto v = static_cast<u64>(shifted[i]);
        for (int l = 0; l <= bits; ++l)
            out[i * (bits + 1) + l] = static_cast<i64>(prefix_bits(v, bits, l));
    }
    return out;
}

// Componentwise-distinct sums of one table per position in [from, to).
// Deduplicating after every position keeps the working set near the number of
// distinct profiles instead of the raw combination count. An empty list means
// no tuples exist at all; the result is then empty.
std::vector<Vec> summed_tables(const std::vector<std::vector<Vec>>& tables, std::size_t from,
                               std::size_t to, std::size_t flat) {
    std::vector<Vec> acc{Vec(flat, 0)};
    for (std::size_t j = from; j < to; ++j) {
        std::vector<Vec> dedup = tables[j];
        std::sort(dedup.begin(), dedup.end());
        dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
        if (dedup.empty()) return {};
        if (acc.size() > sum_cap() / dedup.size())
            throw ResourceLimit("certificate enumeration exceeds the sum cap");
        std::vector<Vec> next;
        next.reserve(acc.size() * dedup.size());
        for (const Vec& base : acc)
            for (const Vec& t : dedup) {
                Vec s(flat);
                for (std::size_t c = 0; c < flat; ++c) s[c] = base[c] + t[c];
                next.push_back(std::move(s));
            }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        acc = std::move(next);
    }
    return acc;
}

struct CertTuple {
    std::vector<int> levels;
    std::vector<i64> w;
    std::vector<i64> e;
    auto operator<=>(const CertTuple&) const = default;
};

// Certificates actually achieved by some tuple, found by joining the two
// half-prefix sums. Guesses nobody achieves would only add instances with
// zero witnesses, so skipping them changes neither the decision OR nor any
// signed count, and it keeps families near the data size instead of the full
// level/slack grid. with_e distinguishes counting (exact per-tuple guess)
// from decision (level and slack only).
std::set<CertTuple> achieved_certs(const EqualityMaps& maps,
                                   const std::vector<std::vector<Vec>>& tables, bool with_e) {
    const std::size_t m = maps.z.size();
    const std::size_t k = tables.size();
    const int bits = maps.bits;

    Vec ztable(m * (bits + 1));
    for (std::size_t i = 0; i < m; ++i) {
        auto z = static_cast<u64>(maps.z[i]);
        for (int l = 0; l <= bits; ++l)
            ztable[i * (bits + 1) + l] = static_cast<i64>(prefix_bits(z, bits, l));
    }

    std::size_t h = (k + 1) / 2;
    std::vector<Vec> lo = summed_tables(tables, 0, h, m * (bits + 1));
    std::vector<Vec> hi = summed_tables(tables, h, k, m * (bits + 1));
    std::set<CertTuple> certs;
    if (lo.empty() || hi.empty()) return certs;  // some set was empty: no tuples
    if (lo.size() > sum_cap() / hi.size())
        throw ResourceLimit("certificate join exceeds the sum cap");
    CertTuple cert;
    cert.levels.resize(m);
    cert.w.resize(m);
    cert.e.assign(with_e ? m : 0, 0);
    for (const Vec& a : lo)
        for (const Vec& b : hi) {
            bool ok = true;
            for (std::size_t i = 0; i < m && ok; ++i) {
                const std::size_t base = i * (bits + 1);
                int lvl = 0;
                for (int l = 1; l <= bits; ++l)
                    if (a[base + l] + b[base + l] - ztable[base + l] >= 1) {
                        lvl = l;
                        break;
                    }
                if (lvl == 0) {
                    ok = false;  // this tuple violates atom i: no certificate
                    break;
                }
                cert.levels[i] = lvl;
                cert.w[i] = a[base + lvl] + b[base + lvl] - ztable[base + lvl];
                if (with_e) cert.e[i] = a[base + lvl - 1] + b[base + lvl - 1] - ztable[base + lvl - 1];
            }
            if (ok) certs.insert(cert);
        }
    return certs;
}

// Vector instance for one guess: per element the chosen-level prefixes (and
// for counting the level-below prefixes), target the z prefixes plus slacks.
VectorInstance cert_instance(const EqualityMaps& maps,
                             const std::vector<std::vector<Vec>>& tables, const CertTuple& cert) {
    const std::size_t m = maps.z.size();
    const int bits = maps.bits;
    const bool with_e = !cert.e.empty();
    const std::size_t dim = with_e ? 2 * m : m;

    VectorInstance vi;
    vi.lists.resize(tables.size());
    for (std::size_t j = 0; j < tables.size(); ++j) {
        vi.lists[j].reserve(tables[j].size());
        for (const Vec& table : tables[j]) {
            Vec val(dim);
            for (std::size_t i = 0; i < m; ++i) {
                val[i] = table[i * (bits + 1) + cert.levels[i]];
                if (with_e) val[m + i] = table[i * (bits + 1) + cert.levels[i] - 1];
            }
            vi.lists[j].push_back(std::move(val));
        }
    }
    vi.target.resize(dim);
    for (std::size_t i = 0; i < m; ++i) {
        auto z = static_cast<u64>(maps.z[i]);
        vi.target[i] = static_cast<i64>(prefix_bits(z, bits, cert.levels[i])) + cert.w[i];
        if (with_e)
            vi.target[m + i] =
                static_cast<i64>(prefix_bits(z, bits, cert.levels[i] - 1)) + cert.e[i];
    }
    return vi;
}

}  // namespace

std::optional<CrossingCert> find_unique_lb(const std::vector<u64>& xs, u64 z, int bit_length) {
    if (bit_length < 0 || bit_length > 62)
        throw std::invalid_argument("bit length must be in 0..62");
    const u64 lim = u64{1} << bit_length;
    if (z >= lim) throw std::invalid_argument("z does not fit in the given bit length");
    for (u64 x : xs)
        if (x >= lim) throw std::invalid_argument("value does not fit in the given bit length");

    i64 prev = 0;  // the level-0 prefixes are all zero
    for (int l = 1; l <= bit_length; ++l) {
        i128 d = -i128(prefix_bits(z, bit_length, l));
        for (u64 x : xs) d += prefix_bits(x, bit_length, l);
        if (d >= 1) return CrossingCert{l, narrow(d, "prefix slack"), prev};
        prev = narrow(d, "prefix slack");
    }
    return std::nullopt;
}

EqualityMaps ineq_to_eq_maps(const BoundClause& clause, const std::vector<std::vector<Vec>>& sets) {
    const std::size_t m = clause.atoms.size();
    const std::size_t k = sets.size();
    if (m == 0) throw std::invalid_argument("cannot shift an atomless clause");
    if (k == 0) throw std::invalid_argument("need at least one quantifier position");

    i128 span = 0;
    for (const BoundAtom& atom : clause.atoms) {
        span = std::max<i128>(span, atom.rhs < 0 ? -i128(atom.rhs) : i128(atom.rhs));
        for (std::size_t j = 0; j < k; ++j)
            for (const Vec& point : sets[j]) {
                i128 p = dot(atom.coeffs[j], point);
                span = std::max(span, p < 0 ? -p : p);
            }
    }

    EqualityMaps maps;
    maps.shift = narrow(span + 1, "shift");
    maps.z.reserve(m);
    i128 top = i128(k) * 2 * maps.shift;
    for (const BoundAtom& atom : clause.atoms) {
        i128 z = i128(atom.rhs) - 1 + i128(k) * maps.shift;
        maps.z.push_back(narrow(z, "shifted threshold"));
        top = std::max(top, z);
    }
    maps.bits = 1;
    while ((i128{1} << maps.bits) <= top) ++maps.bits;
    if (maps.bits > 56) throw ResourceLimit("shifted values too wide for bit-level certificates");

    maps.x.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        maps.x[j].reserve(sets[j].size());
        for (const Vec& point : sets[j]) {
            Vec vals(m);
            for (std::size_t i = 0; i < m; ++i)
                vals[i] = narrow(maps.shift + dot(clause.atoms[i].coeffs[j], point), "shifted value");
            maps.x[j].push_back(std::move(vals));
        }
    }
    return maps;
}

ksum::KsumInstance<BigInt> encode_vector_instance(const VectorInstance& vi, bool merge_duplicates,
                                                  std::vector<BigInt>* first_encodings) {
    const std::size_t k = vi.lists.size();
    const std::size_t dim = vi.target.size();
    i128 span = 1;
    auto widen = [&](const Vec& v) {
        if (v.size() != dim) throw std::invalid_argument("mixed dimensions in vector instance");
        for (i64 c : v) span = std::max(span, c < 0 ? -i128(c) : i128(c));
    };
    widen(vi.target);
    for (const auto& list : vi.lists)
        for (const Vec& v : list) widen(v);

    const i128 value_off = i128(k) * span;
    const i128 target_off = i128(k) * value_off;
    const BigInt base = BigInt::from_i128(2 * value_off + 1);
    auto encode = [&](const Vec& v, i128 off) {
        BigInt acc(0), pos(1);
        for (i64 c : v) {
            acc += BigInt::from_i128(c + off) * pos;
            pos *= base;
        }
        return acc;
    };

    ksum::KsumInstance<BigInt> out;
    out.target = encode(vi.target, target_off);
    out.lists.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<BigInt> encs;
        encs.reserve(vi.lists[j].size());
        for (const Vec& v : vi.lists[j]) encs.push_back(encode(v, value_off));
        if (j == 0 && first_encodings) *first_encodings = encs;
        if (merge_duplicates) {
            out.lists.push_back(ksum::merged_list(std::move(encs)));
        } else {
            std::sort(encs.begin(), encs.end());
            encs.erase(std::unique(encs.begin(), encs.end()), encs.end());
            ksum::KsumList<BigInt> list;
            for (BigInt& v : encs) list.add(std::move(v), 1);
            out.lists.push_back(std::move(list));
        }
    }
    return out;
}

Family compile_decision(const Instance& inst) {
    require_existential(inst, "decision compilation");
    Family fam;
    fam.k = inst.k();
    for (const auto& set : inst.sets)
        if (set.empty()) return fam;  // an existential over nothing fails

    for (std::size_t ci = 0; ci < inst.dnf.size(); ++ci) {
        const BoundClause& clause = inst.dnf[ci];
        if (clause.atoms.empty()) {  // tautological matrix, sets all nonempty
            fam.trivially_true = true;
            fam.entries.clear();
            return fam;
        }
        EqualityMaps maps = ineq_to_eq_maps(clause, inst.sets);
        std::vector<std::vector<Vec>> tables(fam.k);
        for (std::size_t j = 0; j < fam.k; ++j) {
            tables[j].reserve(maps.x[j].size());
            for (const Vec& x : maps.x[j]) tables[j].push_back(prefix_table(x, maps.bits));
        }
        for (const CertTuple& cert : achieved_certs(maps, tables, false)) {
            FamilyEntry entry;
            entry.group = ci;
            entry.levels = cert.levels;
            entry.w = cert.w;
            entry.instance = encode_vector_instance(cert_instance(maps, tables, cert), false);
            fam.entries.push_back(std::move(entry));
        }
    }
    return fam;
}

Family compile_counting(const Instance& inst) {
    require_existential(inst, "counting compilation");
    Family fam;
    fam.k = inst.k();
    const std::size_t n_clauses = inst.dnf.size();
    if (n_clauses > 16)
        throw ResourceLimit("inclusion-exclusion over more than 16 co-clauses");

    for (std::size_t mask = 1; mask < (std::size_t{1} << n_clauses); ++mask) {
        std::set<BoundAtom> atoms;
        for (std::size_t ci = 0; ci < n_clauses; ++ci)
            if (mask & (std::size_t{1} << ci))
                atoms.insert(inst.dnf[ci].atoms.begin(), inst.dnf[ci].atoms.end());
        bool contradictory = false;
        for (const BoundAtom& a : atoms)
            if (atoms.count(negated_atom(a))) {
                contradictory = true;
                break;
            }
        if (contradictory) continue;

        const int sign = (std::popcount(mask) % 2 == 1) ? 1 : -1;
        if (atoms.empty()) {
            // Conjunction of tautological clauses: every tuple is a witness.
            // Zero-dimensional vectors all encode to 0, so the weighted count
            // is the product of the set sizes, with duplicates included.
            VectorInstance vi;
            vi.lists.resize(fam.k);
            for (std::size_t j = 0; j < fam.k; ++j)
                vi.lists[j].assign(inst.sets[j].size(), Vec{});
            FamilyEntry entry;
            entry.group = mask;
            entry.sign = sign;
            entry.instance = encode_vector_instance(vi, true, &entry.first_values);
            fam.entries.push_back(std::move(entry));
            continue;
        }

        BoundClause conj;
        conj.atoms.assign(atoms.begin(), atoms.end());
        EqualityMaps maps = ineq_to_eq_maps(conj, inst.sets);
        std::vector<std::vector<Vec>> tables(fam.k);
        for (std::size_t j = 0; j < fam.k; ++j) {
            tables[j].reserve(maps.x[j].size());
            for (const Vec& x : maps.x[j]) tables[j].push_back(prefix_table(x, maps.bits));
        }
        for (const CertTuple& cert : achieved_certs(maps, tables, true)) {
            FamilyEntry entry;
            entry.group = mask;
            entry.sign = sign;
            entry.levels = cert.levels;
            entry.w = cert.w;
            entry.e = cert.e;
            entry.instance = encode_vector_instance(cert_instance(maps, tables, cert), true,
                                                    &entry.first_values);
            fam.entries.push_back(std::move(entry));
        }
    }
    return fam;
}

bool solve_family(const Family& fam) {
    if (fam.trivially_true) return true;
    for (const FamilyEntry& entry : fam.entries)
        if (ksum::solve(entry.instance)) return true;
    return false;
}

i64 count_family(const Family& fam) {
    i128 total = 0;
    for (const FamilyEntry& entry : fam.entries)
        total += i128(entry.sign) * i128(ksum::count(entry.instance));
    return narrow(total, "witness count");
}

}  // namespace liaset
