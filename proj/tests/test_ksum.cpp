#include "liaset/ksum.hpp"

#include <doctest.h>

#include <cstdlib>
#include <map>

#include "testutil.hpp"

using namespace liaset;
using namespace liaset::ksum;

TEST_SUITE_BEGIN("ksum");

namespace {

KsumInstance<i128> rnd_instance(std::mt19937_64& g, std::size_t k, std::size_t max_n,
                                u64 max_mult, i64 bound) {
    KsumInstance<i128> in;
    in.target = testutil::rnd_int(g, -2 * bound, 2 * bound);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<i64> raw = testutil::rnd_vec(
            g, static_cast<std::size_t>(testutil::rnd_int(g, 0, static_cast<i64>(max_n))),
            -bound, bound);
        std::sort(raw.begin(), raw.end());
        raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
        KsumList<i128> list;
        for (i64 v : raw) list.add(v, static_cast<u64>(testutil::rnd_int(g, 1, static_cast<i64>(max_mult))));
        in.lists.push_back(std::move(list));
    }
    return in;
}

u64 ref_count(const KsumInstance<i128>& in) {
    u64 total = 0;
    auto rec = [&](auto&& self, std::size_t j, i128 sum, u64 w) -> void {
        if (j == in.k()) {
            total += (sum == in.target) ? w : 0;
            return;
        }
        for (std::size_t i = 0; i < in.lists[j].size(); ++i)
            self(self, j + 1, sum + in.lists[j].values[i], w * in.lists[j].mults[i]);
    };
    rec(rec, 0, 0, 1);
    return total;
}

}  // namespace

TEST_CASE("solve and count agree with exhaustive enumeration") {
    auto g = testutil::rng(13001);
    for (std::size_t k : {1u, 2u, 3u, 4u, 5u}) {
        for (int round = 0; round < 60; ++round) {
            auto in = rnd_instance(g, k, 6, 3, 8);
            CAPTURE(format_ksum(in));
            u64 expected = ref_count(in);
            CHECK(count(in) == expected);
            CHECK(solve(in) == (expected > 0));
        }
    }
}

TEST_CASE("zero lists sum to zero exactly once") {
    KsumInstance<i128> zero;
    CHECK(solve(zero));
    CHECK(count(zero) == 1);
    zero.target = 5;
    CHECK_FALSE(solve(zero));
    CHECK(count(zero) == 0);
}

TEST_CASE("count_allints_3 matches per-value reference") {
    auto g = testutil::rng(13002);
    for (int round = 0; round < 80; ++round) {
        auto in = rnd_instance(g, 3, 6, 3, 8);
        auto per = count_allints_3(in);
        REQUIRE(per.size() == in.lists[0].size());
        u64 recombined = 0;
        for (std::size_t i = 0; i < per.size(); ++i) {
            // Reference: pin list 0 to one copy of value i.
            KsumInstance<i128> pinned = in;
            pinned.lists[0].values = {in.lists[0].values[i]};
            pinned.lists[0].mults = {1};
            CHECK(per[i] == ref_count(pinned));
            recombined += per[i] * in.lists[0].mults[i];
        }
        CHECK(recombined == count(in));
    }
    CHECK_THROWS_AS(count_allints_3(rnd_instance(g, 2, 3, 1, 5)), std::invalid_argument);
}

TEST_CASE("expand_bounded: pinned worked example") {
    // Two lists, each {2 with multiplicity 2}, target 4. D = k*M = 4, so both
    // lists expand to {8, 9} and the target band is 16..18. The per-target
    // plain counts must come out (1, 2, 1), recombining to the weighted 4.
    KsumInstance<i128> in;
    in.target = 4;
    in.lists.resize(2);
    in.lists[0].add(2, 2);
    in.lists[1].add(2, 2);
    auto ex = expand_bounded(in);
    CHECK(ex.instance.lists[0].values == std::vector<i128>{8, 9});
    CHECK(ex.instance.lists[1].values == std::vector<i128>{8, 9});
    REQUIRE(ex.targets.size() == 3);
    std::vector<u64> per_target;
    for (i128 t : ex.targets) {
        ex.instance.target = t;
        per_target.push_back(count(ex.instance));
    }
    CHECK(per_target == std::vector<u64>{1, 2, 1});
    CHECK(per_target[0] + per_target[1] + per_target[2] == count(in));
}

TEST_CASE("expand_bounded: plain counts over the band reproduce weighted counts") {
    auto g = testutil::rng(13003);
    for (std::size_t k : {1u, 2u, 3u}) {
        for (int round = 0; round < 50; ++round) {
            auto in = rnd_instance(g, k, 5, 4, 7);
            auto ex = expand_bounded(in);
            // Expanded lists stay duplicate-free.
            for (const auto& list : ex.instance.lists) {
                auto sorted = list.values;
                std::sort(sorted.begin(), sorted.end());
                CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
                for (u64 m : list.mults) CHECK(m == 1);
            }
            u64 total = 0;
            for (i128 t : ex.targets) {
                ex.instance.target = t;
                total += count(ex.instance);
            }
            CHECK(total == ref_count(in));
        }
    }
}

TEST_CASE("count_heavylight matches count for every theta") {
    auto g = testutil::rng(13004);
    for (int round = 0; round < 60; ++round) {
        auto in = rnd_instance(g, 3, 5, 8, 6);
        u64 expected = count(in);
        for (u64 theta : {1, 2, 3, 9}) {
            CAPTURE(theta);
            CHECK(count_heavylight(in, theta) == expected);
        }
    }
    for (int round = 0; round < 20; ++round) {
        auto in = rnd_instance(g, 5, 3, 4, 4);
        CHECK(count_heavylight(in, 2) == count(in));
    }
    auto in1 = rnd_instance(g, 1, 5, 5, 5);
    CHECK(count_heavylight(in1, 2) == count(in1));
    CHECK_THROWS_AS(count_heavylight(rnd_instance(g, 2, 3, 2, 5), 1), std::invalid_argument);
    CHECK_THROWS_AS(count_heavylight(rnd_instance(g, 3, 3, 2, 5), 0), std::invalid_argument);
}

TEST_CASE("text format round-trips and rejects malformed input") {
    auto g = testutil::rng(13005);
    for (int round = 0; round < 40; ++round) {
        auto in = rnd_instance(g, static_cast<std::size_t>(testutil::rnd_int(g, 1, 4)), 5, 3, 9);
        std::string text = format_ksum(in);
        auto back = parse_ksum<i128>(text);
        CHECK(format_ksum(back) == text);
        CHECK(count(back) == count(in));
    }
    CHECK_THROWS_AS(parse_ksum<i128>(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_ksum<i128>("2 0\n1 2\n"), std::invalid_argument);     // missing line
    CHECK_THROWS_AS(parse_ksum<i128>("1 0\n1 2 1\n"), std::invalid_argument);   // duplicate
    CHECK_THROWS_AS(parse_ksum<i128>("1 0\n1:0\n"), std::invalid_argument);     // zero mult
    CHECK_THROWS_AS(parse_ksum<i128>("1 x\n1\n"), std::invalid_argument);       // bad target
    CHECK_THROWS_AS(parse_ksum<i128>("1 0\n1\n2\n"), std::invalid_argument);    // extra line
    // Empty value lines are legal: the list is empty.
    auto empty = parse_ksum<i128>("2 0\n\n1 2\n");
    CHECK(empty.lists[0].size() == 0);
    CHECK(empty.lists[1].size() == 2);
}

TEST_CASE("BigInt instantiation handles values beyond 128 bits") {
    BigInt huge = BigInt::parse("340282366920938463463374607431768211456");  // 2^128
    KsumInstance<BigInt> in;
    in.target = huge * BigInt(3);
    for (int j = 0; j < 3; ++j) {
        KsumList<BigInt> list;
        list.add(huge, 2);
        list.add(huge - BigInt(1), 1);
        list.add(BigInt(0), 1);
        in.lists.push_back(std::move(list));
    }
    CHECK(solve(in));
    CHECK(count(in) == 8);  // each list must pick `huge`, weight 2^3
    std::string text = format_ksum(in);
    auto back = parse_ksum<BigInt>(text);
    CHECK(count(back) == 8);
    in.target = in.target + BigInt(1);
    CHECK_FALSE(solve(in));
    CHECK(count(in) == 0);
}

TEST_CASE("merged_list folds duplicates into multiplicities") {
    auto list = merged_list<i128>({5, -1, 5, 5, -1, 7});
    REQUIRE(list.size() == 3);
    CHECK(list.values == std::vector<i128>{-1, 5, 7});
    CHECK(list.mults == std::vector<u64>{2, 3, 1});
}

TEST_CASE("solve honors the sum cap on the smaller half") {
    auto g = testutil::rng(13006);
    KsumInstance<i128> in;
    in.target = 0;
    for (int j = 0; j < 4; ++j) {
        KsumList<i128> list;
        for (i64 v = 0; v < 30; ++v) list.add(v * 7 + j, 1);
        in.lists.push_back(std::move(list));
    }
    setenv("LIASET_SUM_CAP", "100", 1);
    CHECK_THROWS_AS(solve(in), ResourceLimit);
    unsetenv("LIASET_SUM_CAP");
    CHECK_FALSE(solve(in));  // all values positive except target 0 combos
}

TEST_SUITE_END();
