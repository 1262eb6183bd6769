#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace liaset {

// Central limits. Everything that can blow up combinatorially checks one of
// these and throws ResourceLimit instead of eating the machine.
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Hard cap on DNF co-clauses produced by normalization.
inline constexpr std::size_t kDnfClauseCap = 4096;

// Default cap on enumerated intermediate sums (meet-in-the-middle tables,
// profile joins, expand_bounded output). Overridable via LIASET_SUM_CAP.
inline constexpr std::uint64_t kDefaultSumCap = 100'000'000;

inline std::uint64_t sum_cap() {
    if (const char* s = std::getenv("LIASET_SUM_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return kDefaultSumCap;
}

using i64 = std::int64_t;
using i128 = __int128;
using u64 = std::uint64_t;

// Integer point. All data coordinates and coefficients are i64; arithmetic
// that could overflow widens to i128 internally.
using Vec = std::vector<i64>;

std::string to_string_i128(i128 v);

}  // namespace liaset
