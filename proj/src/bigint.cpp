#include "liaset/bigint.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace liaset {

namespace {
constexpr u64 kDecChunkBase = 1'000'000'000'000'000'000ULL;  // 10^18
constexpr int kDecChunkDigits = 18;

// mag *= m, then mag += a. Small-operand fused step for decimal parsing.
void mul_add_small(std::vector<u64>& mag, u64 m, u64 a) {
    u64 carry = a;
    for (auto& limb : mag) {
        i128 cur = static_cast<i128>(limb) * m + carry;
        limb = static_cast<u64>(cur);
        carry = static_cast<u64>(static_cast<unsigned __int128>(cur) >> 64);
    }
    if (carry) mag.push_back(carry);
}

// mag /= d in place, returns remainder. d < 2^63.
u64 divmod_small(std::vector<u64>& mag, u64 d) {
    unsigned __int128 rem = 0;
    for (auto it = mag.rbegin(); it != mag.rend(); ++it) {
        unsigned __int128 cur = (rem << 64) | *it;
        *it = static_cast<u64>(cur / d);
        rem = cur % d;
    }
    while (!mag.empty() && mag.back() == 0) mag.pop_back();
    return static_cast<u64>(rem);
}
}  // namespace

BigInt::BigInt(i64 v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    // Negate via u64 to dodge overflow at INT64_MIN.
    u64 m = v > 0 ? static_cast<u64>(v) : ~static_cast<u64>(v) + 1;
    mag_.push_back(m);
}

BigInt BigInt::from_i128(i128 v) {
    BigInt r;
    if (v == 0) return r;
    r.sign_ = v > 0 ? 1 : -1;
    unsigned __int128 m =
        v > 0 ? static_cast<unsigned __int128>(v) : ~static_cast<unsigned __int128>(v) + 1;
    r.mag_.push_back(static_cast<u64>(m));
    if (u64 hi = static_cast<u64>(m >> 64)) r.mag_.push_back(hi);
    return r;
}

BigInt BigInt::parse(std::string_view text) {
    std::size_t pos = 0;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        neg = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) throw std::invalid_argument("empty integer literal");
    BigInt r;
    u64 chunk = 0;
    int chunk_len = 0;
    for (; pos < text.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(text[pos])))
            throw std::invalid_argument("bad digit in integer literal");
        chunk = chunk * 10 + static_cast<u64>(text[pos] - '0');
        if (++chunk_len == kDecChunkDigits) {
            mul_add_small(r.mag_, kDecChunkBase, chunk);
            chunk = 0;
            chunk_len = 0;
        }
    }
    if (chunk_len) {
        u64 scale = 1;
        for (int i = 0; i < chunk_len; ++i) scale *= 10;
        mul_add_small(r.mag_, scale, chunk);
    }
    r.sign_ = r.mag_.empty() ? 0 : (neg ? -1 : 1);
    return r;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

void BigInt::add_mag(std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        u64 bi = i < b.size() ? b[i] : 0;
        u64 s = a[i] + bi;
        u64 c1 = s < a[i];
        a[i] = s + carry;
        carry = c1 | (a[i] < s);
        if (i >= b.size() && carry == 0) break;
    }
    if (carry) a.push_back(1);
}

void BigInt::sub_mag(std::vector<u64>& a, const std::vector<u64>& b) {
    u64 borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        u64 bi = i < b.size() ? b[i] : 0;
        u64 d = a[i] - bi;
        u64 b1 = d > a[i];
        a[i] = d - borrow;
        borrow = b1 | (a[i] > d);
        if (i >= b.size() && borrow == 0) break;
    }
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (rhs.sign_ == 0) return *this;
    if (sign_ == 0) return *this = rhs;
    if (sign_ == rhs.sign_) {
        add_mag(mag_, rhs.mag_);
        return *this;
    }
    int c = cmp_mag(mag_, rhs.mag_);
    if (c == 0) {
        sign_ = 0;
        mag_.clear();
    } else if (c > 0) {
        sub_mag(mag_, rhs.mag_);
        trim();
    } else {
        std::vector<u64> tmp = rhs.mag_;
        sub_mag(tmp, mag_);
        mag_ = std::move(tmp);
        sign_ = rhs.sign_;
        trim();
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
    if (sign_ == 0 || rhs.sign_ == 0) {
        sign_ = 0;
        mag_.clear();
        return *this;
    }
    std::vector<u64> out(mag_.size() + rhs.mag_.size(), 0);
    for (std::size_t i = 0; i < mag_.size(); ++i) {
        u64 carry = 0;
        for (std::size_t j = 0; j < rhs.mag_.size(); ++j) {
            unsigned __int128 cur = static_cast<unsigned __int128>(mag_[i]) * rhs.mag_[j] +
                                    out[i + j] + carry;
            out[i + j] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
        }
        out[i + rhs.mag_.size()] += carry;
    }
    mag_ = std::move(out);
    sign_ *= rhs.sign_;
    trim();
    return *this;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
    if (sign_ != rhs.sign_) return sign_ <=> rhs.sign_;
    int c = cmp_mag(mag_, rhs.mag_) * sign_;
    return c <=> 0;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<u64> tmp = mag_;
    std::vector<u64> chunks;
    while (!tmp.empty()) chunks.push_back(divmod_small(tmp, kDecChunkBase));
    std::string out;
    if (sign_ < 0) out.push_back('-');
    out += std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out.append(kDecChunkDigits - part.size(), '0');
        out += part;
    }
    return out;
}

std::size_t BigInt::hash() const {
    // FNV-1a over sign and limbs; stable across runs, good enough for
    // unordered_map buckets of encoded instance values.
    u64 h = 14695981039346656037ULL;
    auto mix = [&h](u64 v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    mix(static_cast<u64>(static_cast<i64>(sign_)));
    for (u64 limb : mag_) mix(limb);
    return static_cast<std::size_t>(h);
}

std::string to_string_i128(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 m =
        neg ? ~static_cast<unsigned __int128>(v) + 1 : static_cast<unsigned __int128>(v);
    std::string out;
    while (m) {
        out.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
        m /= 10;
    }
    if (neg) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace liaset
