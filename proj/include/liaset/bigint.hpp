#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "liaset/config.hpp"

namespace liaset {

// Arbitrary-precision signed integer. Sign-magnitude, 64-bit limbs, little
// endian, no trailing zero limbs (zero has empty magnitude and sign 0).
// Only the operations the encoders need: ring ops, comparison, decimal I/O,
// hashing. Division exists solely for printing.
class BigInt {
  public:
    BigInt() = default;
    BigInt(i64 v);  // NOLINT: implicit by design, mirrors built-in ints
    static BigInt from_i128(i128 v);
    static BigInt parse(std::string_view text);  // throws std::invalid_argument

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);
    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

    bool operator==(const BigInt&) const = default;
    std::strong_ordering operator<=>(const BigInt& rhs) const;

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    std::string to_string() const;
    std::size_t hash() const;

  private:
    int sign_ = 0;
    std::vector<u64> mag_;

    void trim();
    static int cmp_mag(const std::vector<u64>& a, const std::vector<u64>& b);
    static void add_mag(std::vector<u64>& a, const std::vector<u64>& b);
    // Precondition: a >= b as magnitudes.
    static void sub_mag(std::vector<u64>& a, const std::vector<u64>& b);
};

struct BigIntHash {
    std::size_t operator()(const BigInt& v) const { return v.hash(); }
};

}  // namespace liaset
