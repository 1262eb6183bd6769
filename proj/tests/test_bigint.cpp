#include "liaset/bigint.hpp"

#include <doctest.h>

#include <cstdint>
#include <limits>

#include "testutil.hpp"

using liaset::BigInt;
using liaset::i128;

TEST_SUITE_BEGIN("bigint");

TEST_CASE("small values round-trip through i64 constructor") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-1).to_string() == "-1");
    CHECK(BigInt(42).to_string() == "42");
    CHECK(BigInt(std::numeric_limits<std::int64_t>::min()).to_string() ==
          "-9223372036854775808");
    CHECK(BigInt(std::numeric_limits<std::int64_t>::max()).to_string() ==
          "9223372036854775807");
}

TEST_CASE("ring ops agree with __int128 on random i64 operands") {
    auto g = testutil::rng(7001);
    for (int it = 0; it < 2000; ++it) {
        std::int64_t a = testutil::rnd_int(g, -1'000'000'000'000LL, 1'000'000'000'000LL);
        std::int64_t b = testutil::rnd_int(g, -1'000'000'000'000LL, 1'000'000'000'000LL);
        CHECK(BigInt(a) + BigInt(b) == BigInt::from_i128(i128(a) + b));
        CHECK(BigInt(a) - BigInt(b) == BigInt::from_i128(i128(a) - b));
        CHECK(BigInt(a) * BigInt(b) == BigInt::from_i128(i128(a) * b));
        CHECK((BigInt(a) <=> BigInt(b)) == (a <=> b));
    }
}

TEST_CASE("multi-limb multiplication hits known digits") {
    BigInt two64 = BigInt(1LL << 32) * BigInt(1LL << 32);
    CHECK(two64.to_string() == "18446744073709551616");
    BigInt two128 = two64 * two64;
    CHECK(two128.to_string() == "340282366920938463463374607431768211456");
    CHECK((two128 - two128).is_zero());
    CHECK((two128 * BigInt(-1)).to_string() ==
          "-340282366920938463463374607431768211456");
}

TEST_CASE("decimal parse inverts to_string") {
    auto g = testutil::rng(7002);
    BigInt acc(1);
    for (int it = 0; it < 60; ++it) {
        acc *= BigInt(testutil::rnd_int(g, 2, 1'000'000'000));
        BigInt signed_acc = (it % 2) ? -acc : acc;
        CHECK(BigInt::parse(signed_acc.to_string()) == signed_acc);
    }
    CHECK(BigInt::parse("+17") == BigInt(17));
    CHECK(BigInt::parse("000123") == BigInt(123));
    CHECK_THROWS_AS(BigInt::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::parse("12x3"), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::parse("-"), std::invalid_argument);
}

TEST_CASE("mixed-sign addition crosses zero correctly") {
    BigInt big = BigInt::parse("340282366920938463463374607431768211456");
    CHECK((big + (-big)).is_zero());
    CHECK((-big + (big + BigInt(1))) == BigInt(1));
    CHECK((big - (big - BigInt(5))) == BigInt(5));
    // Magnitude borrow across limbs.
    BigInt a = BigInt::parse("18446744073709551616");  // 2^64
    CHECK((a - BigInt(1)).to_string() == "18446744073709551615");
}

TEST_CASE("equal values hash equal") {
    BigInt a = BigInt::parse("123456789012345678901234567890");
    BigInt b = BigInt::parse("123456789012345678901234567890");
    CHECK(a.hash() == b.hash());
    CHECK(a.hash() != (-a).hash());  // sign participates
}

TEST_CASE("i128 pretty printer") {
    CHECK(liaset::to_string_i128(0) == "0");
    CHECK(liaset::to_string_i128(-45) == "-45");
    i128 big = i128(1'000'000'000'000'000'000LL) * 1'000'000'000;
    CHECK(liaset::to_string_i128(big) == "1000000000000000000000000000");
}

TEST_SUITE_END();
