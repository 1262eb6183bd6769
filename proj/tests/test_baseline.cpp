#include "liaset/baseline.hpp"

#include <doctest.h>

#include <cstdlib>

#include "testutil.hpp"

using namespace liaset;

TEST_SUITE_BEGIN("baseline");

TEST_CASE("brute_decide matches the parse-tree reference on random sentences") {
    auto g = testutil::rng(11001);
    const char* patterns[] = {"E", "A", "EA", "AE", "EE", "AA", "EAE", "AEA", "EEE", "AAEA"};
    for (const char* pattern : patterns) {
        for (int round = 0; round < 60; ++round) {
            auto s = testutil::rnd_sentence(g, pattern);
            CAPTURE(s.text);
            CHECK(brute_decide(bind(s.formula, s.dataset)) ==
                  testutil::ref_decide(s.formula, s.dataset));
        }
    }
}

TEST_CASE("brute_count matches the parse-tree reference") {
    auto g = testutil::rng(11002);
    for (const char* pattern : {"E", "EE", "EEE"}) {
        for (int round = 0; round < 60; ++round) {
            auto s = testutil::rnd_sentence(g, pattern);
            CAPTURE(s.text);
            CHECK(brute_count(bind(s.formula, s.dataset)) ==
                  testutil::ref_count(s.formula, s.dataset));
        }
    }
    Dataset d = dataset_from_json(R"({"sets": {"S0": [[1]]}})");
    CHECK_THROWS_AS(brute_count(bind(parse_formula("forall x0 in S0 : x0[1] = 1"), d)),
                    std::invalid_argument);
}

TEST_CASE("decide_existential matches brute force") {
    auto g = testutil::rng(11003);
    for (const char* pattern : {"E", "EE", "EEE", "EEEE"}) {
        for (int round = 0; round < 80; ++round) {
            auto s = testutil::rnd_sentence(g, pattern);
            Instance inst = bind(s.formula, s.dataset);
            CAPTURE(s.text);
            CHECK(decide_existential(inst) == brute_decide(inst));
        }
    }
}

TEST_CASE("decide_two_quant matches brute force on every pattern") {
    auto g = testutil::rng(11004);
    for (const char* pattern : {"EE", "EA", "AE", "AA"}) {
        for (int round = 0; round < 120; ++round) {
            auto s = testutil::rnd_sentence(g, pattern);
            CAPTURE(s.text);
            CHECK(decide_two_quant(s.formula, s.dataset) ==
                  brute_decide(bind(s.formula, s.dataset)));
        }
    }
}

TEST_CASE("decide_general matches brute force on longer prefixes") {
    auto g = testutil::rng(11005);
    const char* patterns[] = {"EEE", "EEA", "EAE", "AEE", "AAE", "AEA", "EAA", "AAA",
                              "EAEA", "AEEA", "AAAA", "EEEE"};
    testutil::SentenceOptions opt;
    opt.max_set_size = 4;
    for (const char* pattern : patterns) {
        for (int round = 0; round < 40; ++round) {
            auto s = testutil::rnd_sentence(g, pattern, opt);
            CAPTURE(s.text);
            CHECK(decide_general(s.formula, s.dataset) ==
                  brute_decide(bind(s.formula, s.dataset)));
        }
    }
}

TEST_CASE("empty sets follow quantifier semantics") {
    Dataset d = dataset_from_json(R"({"sets": {"N": [[1]], "E": []}})");
    auto decide = [&](const char* text) { return brute_decide(bind(parse_formula(text), d)); };
    CHECK_FALSE(decide("exists x0 in E : x0[1] = x0[1]"));
    CHECK(decide("forall x0 in E : x0[1] > x0[1]"));
    CHECK_FALSE(decide("forall x0 in N exists x1 in E : x0[1] = x0[1]"));
    CHECK(decide("forall x0 in E exists x1 in E : x0[1] = x1[1]"));
    // The faster paths agree.
    Formula fe = parse_formula("forall x0 in N exists x1 in E : x0[1] = x0[1]");
    CHECK_FALSE(decide_two_quant(fe, d));
    CHECK_FALSE(decide_existential(bind(parse_formula("exists x0 in E : x0[1] = x0[1]"), d)));
}

TEST_CASE("half-tuple enumeration respects the sum cap") {
    auto g = testutil::rng(11006);
    Dataset d;
    d.sets["S0"] = testutil::rnd_set(g, 20, 1, -3, 3);
    d.sets["S1"] = d.sets["S0"];
    d.sets["S2"] = d.sets["S0"];
    d.sets["S3"] = d.sets["S0"];
    Formula f = parse_formula(
        "exists x0 in S0 exists x1 in S1 exists x2 in S2 exists x3 in S3 : "
        "x0[1] + x1[1] + x2[1] + x3[1] = 0");
    setenv("LIASET_SUM_CAP", "100", 1);
    CHECK_THROWS_AS(decide_existential(bind(f, d)), ResourceLimit);
    unsetenv("LIASET_SUM_CAP");
    CHECK(decide_existential(bind(f, d)));
}

TEST_SUITE_END();
