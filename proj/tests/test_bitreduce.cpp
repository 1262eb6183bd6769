#include <doctest.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "liaset/baseline.hpp"
#include "liaset/bitreduce.hpp"
#include "liaset/dataset.hpp"
#include "testutil.hpp"

using namespace liaset;

namespace {

// Independent of find_unique_lb: recompute both prefix walks by shifting and
// collect every level whose slacks land in the certificate ranges.
std::vector<CrossingCert> enumerated_certs(const std::vector<u64>& xs, u64 z, int bits) {
    std::vector<CrossingCert> out;
    const i64 k = static_cast<i64>(xs.size());
    for (int l = 1; l <= bits; ++l) {
        i64 d = -static_cast<i64>(z >> (bits - l));
        i64 d_prev = -static_cast<i64>(z >> (bits - l + 1));
        for (u64 x : xs) {
            d += static_cast<i64>(x >> (bits - l));
            d_prev += static_cast<i64>(x >> (bits - l + 1));
        }
        if (d >= 1 && d <= k && d_prev <= 0 && d_prev >= -((k - 1) / 2))
            out.push_back({l, d, d_prev});
    }
    return out;
}

i64 brute_vector_count(const VectorInstance& vi) {
    const std::size_t k = vi.lists.size();
    if (k == 0) return std::all_of(vi.target.begin(), vi.target.end(), [](i64 c) { return c == 0; });
    std::vector<std::size_t> idx(k, 0);
    i64 total = 0;
    for (;;) {
        Vec sum(vi.target.size(), 0);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += vi.lists[j][idx[j]][c];
        if (sum == vi.target) ++total;
        std::size_t c = k;
        while (c-- > 0) {
            if (++idx[c] < vi.lists[c].size()) break;
            idx[c] = 0;
            if (c == 0) return total;
        }
    }
}

}  // namespace

TEST_SUITE_BEGIN("bitreduce");

TEST_CASE("crossing certificate on pinned inputs") {
    // 5 + 3 > 6 over 4 bits: the prefix sums cross only at the full width.
    auto c = find_unique_lb({5, 3}, 6, 4);
    REQUIRE(c.has_value());
    CHECK(c->level == 4);
    CHECK(c->b == 2);
    CHECK(c->e == 0);

    // 3 + 3 + 3 > 4 over 3 bits. The prefix walk jumps from -1 straight to 1,
    // so no level pairs a positive slack with a zero slack below it; the
    // crossing level still certifies, with the below-slack recorded as -1.
    auto j = find_unique_lb({3, 3, 3}, 4, 3);
    REQUIRE(j.has_value());
    CHECK(*j == CrossingCert{2, 1, -1});
    for (int l = 1; l <= 3; ++l) {
        i64 d = 3 * static_cast<i64>(3u >> (3 - l)) - static_cast<i64>(4u >> (3 - l));
        i64 prev = 3 * static_cast<i64>(3u >> (4 - l)) - static_cast<i64>(4u >> (4 - l));
        CHECK(!(d >= 1 && d <= 3 && prev == 0));
    }

    CHECK(!find_unique_lb({1, 2}, 3, 2).has_value());
    CHECK(!find_unique_lb({0}, 0, 1).has_value());
    CHECK(!find_unique_lb({}, 5, 3).has_value());
    CHECK_THROWS_AS(find_unique_lb({8}, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(find_unique_lb({1}, 9, 3), std::invalid_argument);
}

TEST_CASE("crossing certificate matches enumeration on random inputs") {
    auto g = testutil::rng(2024);
    for (int round = 0; round < 4000; ++round) {
        int bits = static_cast<int>(testutil::rnd_int(g, 1, 20));
        int k = static_cast<int>(testutil::rnd_int(g, 1, 4));
        i64 lim = i64{1} << bits;
        std::vector<u64> xs(k);
        for (auto& x : xs) x = static_cast<u64>(testutil::rnd_int(g, 0, lim - 1));
        u64 z = static_cast<u64>(testutil::rnd_int(g, 0, lim - 1));

        i64 sum = 0;
        for (u64 x : xs) sum += static_cast<i64>(x);
        bool above = sum > static_cast<i64>(z);

        auto cert = find_unique_lb(xs, z, bits);
        auto listed = enumerated_certs(xs, z, bits);
        if (above) {
            REQUIRE(cert.has_value());
            // exactly one level satisfies both slack ranges, and it is ours
            REQUIRE(listed.size() == 1);
            CHECK(listed[0] == *cert);
            CHECK(cert->b >= 1);
            CHECK(cert->b <= k);
            CHECK(cert->e <= 0);
            CHECK(cert->e >= -((k - 1) / 2));
        } else {
            CHECK(!cert.has_value());
            CHECK(listed.empty());
        }

        // the level-slack equality alone is sound and complete for the
        // strict comparison, just not unique
        bool loose = false;
        for (int l = 1; l <= bits && !loose; ++l) {
            i64 d = -static_cast<i64>(z >> (bits - l));
            for (u64 x : xs) d += static_cast<i64>(x >> (bits - l));
            if (d >= 1 && d <= k) loose = true;
        }
        CHECK(loose == above);
    }
}

TEST_CASE("inequality shift produces bounded positive values") {
    auto g = testutil::rng(77);
    for (int round = 0; round < 200; ++round) {
        int k = static_cast<int>(testutil::rnd_int(g, 1, 3));
        int m = static_cast<int>(testutil::rnd_int(g, 1, 3));
        std::size_t dim = static_cast<std::size_t>(testutil::rnd_int(g, 1, 2));
        std::vector<std::vector<Vec>> sets(k);
        for (auto& s : sets)
            s = testutil::rnd_set(g, static_cast<std::size_t>(testutil::rnd_int(g, 1, 4)), dim, -5, 5);
        BoundClause clause;
        for (int i = 0; i < m; ++i) {
            BoundAtom atom;
            for (int j = 0; j < k; ++j) atom.coeffs.push_back(testutil::rnd_vec(g, dim, -3, 3));
            atom.rhs = testutil::rnd_int(g, -6, 6);
            clause.atoms.push_back(atom);
        }

        EqualityMaps maps = ineq_to_eq_maps(clause, sets);
        i128 top = i128{1} << maps.bits;
        CHECK(i128(k) * 2 * maps.shift < top);
        for (i64 z : maps.z) {
            CHECK(z >= 0);
            CHECK(i128(z) < top);
        }
        for (int j = 0; j < k; ++j)
            for (const Vec& vals : maps.x[j])
                for (i64 x : vals) {
                    CHECK(x >= 1);
                    CHECK(x <= 2 * maps.shift - 1);
                }

        // strict dominance over the shifted values is the original atom
        std::vector<std::size_t> idx(k, 0);
        bool done = false;
        while (!done) {
            std::vector<const Vec*> pts(k);
            for (int j = 0; j < k; ++j) pts[j] = &sets[j][idx[j]];
            for (int i = 0; i < m; ++i) {
                i128 shifted = 0;
                for (int j = 0; j < k; ++j) shifted += maps.x[j][idx[j]][i];
                bool holds = clause.atoms[i].lhs_value(pts) >= clause.atoms[i].rhs;
                CHECK((shifted > maps.z[i]) == holds);
            }
            std::size_t c = k;
            done = true;
            while (c-- > 0) {
                if (++idx[c] < sets[c].size()) {
                    done = false;
                    break;
                }
                idx[c] = 0;
            }
        }
    }
}

TEST_CASE("vector encoding: digit packing example") {
    // three lists, components within |2|: base 13, value shift 6, target 18
    VectorInstance vi;
    vi.lists.push_back({Vec{-1, 2}});
    vi.lists.push_back({Vec{1, 0}});
    vi.lists.push_back({Vec{0, -2}});
    vi.target = {0, 0};
    auto inst = encode_vector_instance(vi, true);
    REQUIRE(inst.k() == 3);
    CHECK(inst.lists[0].values[0] == BigInt(5 + 8 * 13));
    CHECK(inst.lists[1].values[0] == BigInt(7 + 6 * 13));
    CHECK(inst.lists[2].values[0] == BigInt(6 + 4 * 13));
    CHECK(inst.target == BigInt(18 + 18 * 13));
    // (-1,2) + (1,0) + (0,-2) = (0,0): the one tuple is a witness
    CHECK(ksum::count(inst) == 1);
}

TEST_CASE("vector encoding preserves witness counts") {
    auto g = testutil::rng(31337);
    for (int round = 0; round < 400; ++round) {
        std::size_t k = static_cast<std::size_t>(testutil::rnd_int(g, 1, 3));
        std::size_t dim = static_cast<std::size_t>(testutil::rnd_int(g, 0, 3));
        VectorInstance vi;
        vi.lists.resize(k);
        for (auto& list : vi.lists) {
            int n = static_cast<int>(testutil::rnd_int(g, 0, 5));
            for (int i = 0; i < n; ++i) list.push_back(testutil::rnd_vec(g, dim, -4, 4));
        }
        vi.target = testutil::rnd_vec(g, dim, -6, 6);
        bool all_filled = std::none_of(vi.lists.begin(), vi.lists.end(),
                                       [](const auto& l) { return l.empty(); });
        if (round % 7 == 0 && dim > 0 && all_filled) {
            // force collisions and at least one exact witness
            vi.lists[0].push_back(vi.lists[0][0]);
            Vec t(dim, 0);
            for (auto& list : vi.lists)
                for (std::size_t c = 0; c < dim; ++c) t[c] += list[0][c];
            vi.target = t;
        }

        std::vector<BigInt> firsts;
        auto counting = encode_vector_instance(vi, true, &firsts);
        auto decision = encode_vector_instance(vi, false);
        i64 expect = 0;
        if (std::none_of(vi.lists.begin(), vi.lists.end(),
                         [](const auto& l) { return l.empty(); }))
            expect = brute_vector_count(vi);
        CHECK(static_cast<i64>(ksum::count(counting)) == expect);
        CHECK(ksum::solve(decision) == (expect > 0));
        REQUIRE(firsts.size() == vi.lists[0].size());
        for (const BigInt& v : firsts) {
            const auto& merged = counting.lists[0].values;
            CHECK(std::find(merged.begin(), merged.end(), v) != merged.end());
        }
    }
}

TEST_CASE("decision compilation agrees with brute force") {
    auto g = testutil::rng(555);
    testutil::SentenceOptions opt;
    opt.max_set_size = 4;
    opt.coord_bound = 3;
    const char* patterns[] = {"E", "EE", "EEE"};
    int compiled = 0;
    for (int round = 0; round < 240; ++round) {
        auto s = testutil::rnd_sentence(g, patterns[round % 3], opt);
        Instance inst = bind(s.formula, s.dataset);
        if (inst.dnf.size() > 6) continue;
        Family fam = compile_decision(inst);
        CHECK(solve_family(fam) == brute_decide(inst));
        ++compiled;

        // every guess lies on the level/slack grid, so the family for one
        // co-clause can never exceed (bits * k)^m entries
        for (const FamilyEntry& entry : fam.entries) {
            CHECK(entry.sign == 1);
            CHECK(entry.e.empty());
            EqualityMaps maps = ineq_to_eq_maps(inst.dnf[entry.group], inst.sets);
            REQUIRE(entry.levels.size() == maps.z.size());
            for (std::size_t i = 0; i < entry.levels.size(); ++i) {
                CHECK(entry.levels[i] >= 1);
                CHECK(entry.levels[i] <= maps.bits);
                CHECK(entry.w[i] >= 1);
                CHECK(entry.w[i] <= static_cast<i64>(inst.k()));
            }
        }
    }
    CHECK(compiled > 200);
}

TEST_CASE("counting compilation agrees with brute force") {
    auto g = testutil::rng(808);
    testutil::SentenceOptions opt;
    opt.max_set_size = 4;
    opt.coord_bound = 2;  // small coordinates force duplicate projections
    const char* patterns[] = {"E", "EE", "EEE"};
    int compiled = 0;
    for (int round = 0; round < 240; ++round) {
        auto s = testutil::rnd_sentence(g, patterns[round % 3], opt);
        Instance inst = bind(s.formula, s.dataset);
        if (inst.dnf.size() > 5) continue;
        Family fam = compile_counting(inst);
        CHECK(count_family(fam) == brute_count(inst));
        ++compiled;
    }
    CHECK(compiled > 180);
}

TEST_CASE("counting compilation: tautology counts every tuple") {
    Formula f = parse_formula("exists x in A exists y in B : x[1] >= x[1]");
    Dataset d;
    d.sets["A"] = {{1}, {1}, {2}};
    d.sets["B"] = {{0}, {5}};
    Instance inst = bind(f, d);
    REQUIRE(inst.matrix_true());
    Family fam = compile_counting(inst);
    REQUIRE(fam.entries.size() == 1);
    CHECK(fam.entries[0].sign == 1);
    CHECK(fam.entries[0].levels.empty());
    CHECK(count_family(fam) == 6);
    CHECK(fam.entries[0].first_values.size() == 3);
}

TEST_CASE("per-first-element counts recombine through the family") {
    auto g = testutil::rng(4242);
    testutil::SentenceOptions opt;
    opt.max_set_size = 4;
    opt.coord_bound = 2;
    opt.allow_empty_sets = false;
    for (int round = 0; round < 60; ++round) {
        auto s = testutil::rnd_sentence(g, "EEE", opt);
        Instance inst = bind(s.formula, s.dataset);
        if (inst.dnf.size() > 4) continue;
        Family fam = compile_counting(inst);

        std::vector<i64> per(inst.sets[0].size(), 0);
        for (const FamilyEntry& entry : fam.entries) {
            auto by_value = ksum::count_allints_3(entry.instance);
            for (std::size_t a = 0; a < per.size(); ++a) {
                const auto& vals = entry.instance.lists[0].values;
                auto it = std::find(vals.begin(), vals.end(), entry.first_values[a]);
                REQUIRE(it != vals.end());
                per[a] += entry.sign * static_cast<i64>(by_value[it - vals.begin()]);
            }
        }
        for (std::size_t a = 0; a < per.size(); ++a) {
            Instance pinned = inst;
            pinned.sets[0] = {inst.sets[0][a]};
            CHECK(per[a] == brute_count(pinned));
        }
    }
}

TEST_CASE("compilation input validation") {
    Formula f = parse_formula("forall x in A : x[1] >= 0");
    Dataset d;
    d.sets["A"] = {{1}};
    Instance inst = bind(f, d);
    CHECK_THROWS_AS(compile_decision(inst), std::invalid_argument);
    CHECK_THROWS_AS(compile_counting(inst), std::invalid_argument);

    Instance wide = bind(parse_formula("exists x in A : x[1] >= 0"), d);
    wide.dnf.assign(17, wide.dnf[0]);
    CHECK_THROWS_AS(compile_counting(wide), ResourceLimit);

    // an existential over an empty set fails, matrix notwithstanding
    Dataset none_data;
    none_data.sets["A"] = {};
    Instance none = bind(parse_formula("exists x in A : x[1] >= x[1]"), none_data);
    Family fam = compile_decision(none);
    CHECK(!fam.trivially_true);
    CHECK(fam.entries.empty());
    CHECK(!solve_family(fam));
    CHECK(count_family(compile_counting(none)) == 0);
}

TEST_SUITE_END();
