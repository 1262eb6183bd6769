#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "liaset/bigint.hpp"
#include "liaset/config.hpp"

namespace liaset::ksum {

// k lists of (value, multiplicity) and a target; a witness is one value per
// list summing to the target. Decision ignores multiplicities; counting
// weighs each witness by the product of its multiplicities. Instantiated for
// __int128 (direct use, benchmarks) and BigInt (encoded vector instances).

template <typename T>
struct KsumList {
    std::vector<T> values;
    std::vector<u64> mults;  // parallel to values, every entry >= 1

    std::size_t size() const { return values.size(); }
    void add(T v, u64 m = 1) {
        values.push_back(std::move(v));
        mults.push_back(m);
    }
};

template <typename T>
struct KsumInstance {
    T target{};
    std::vector<KsumList<T>> lists;
    std::size_t k() const { return lists.size(); }
};

// Sort values and merge duplicates into multiplicities.
template <typename T>
KsumList<T> merged_list(std::vector<T> values) {
    std::sort(values.begin(), values.end());
    KsumList<T> out;
    for (std::size_t i = 0; i < values.size();) {
        std::size_t j = i;
        while (j < values.size() && values[j] == values[i]) ++j;
        out.add(values[i], j - i);
        i = j;
    }
    return out;
}

// ---- Value plumbing ---------------------------------------------------------

template <typename T>
struct ValueOps;

template <>
struct ValueOps<i128> {
    static u64 hash(i128 v) {
        auto mix = [](u64 x) {
            x += 0x9e3779b97f4a7c15ULL;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
            return x ^ (x >> 31);
        };
        auto u = static_cast<unsigned __int128>(v);
        return mix(static_cast<u64>(u)) ^ (mix(static_cast<u64>(u >> 64)) * 3);
    }
    static std::string str(i128 v) { return to_string_i128(v); }
    static i128 parse(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("empty integer token");
        bool neg = s[0] == '-';
        std::size_t i = neg || s[0] == '+' ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("sign without digits");
        i128 v = 0;
        constexpr i128 kMax = ~(i128(1) << 127);
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("bad digit in integer token");
            int d = s[i] - '0';
            if (v > (kMax - d) / 10) throw std::invalid_argument("integer token too large");
            v = v * 10 + d;
        }
        return neg ? -v : v;
    }
};

template <>
struct ValueOps<BigInt> {
    static u64 hash(const BigInt& v) { return v.hash(); }
    static std::string str(const BigInt& v) { return v.to_string(); }
    static BigInt parse(std::string_view s) { return BigInt::parse(s); }
};

// Open-addressing map from values to u64, sized once up front. The standard
// unordered containers are a measured bottleneck on the hot probe loops.
template <typename T>
class FlatMap {
  public:
    explicit FlatMap(std::size_t expected) {
        std::size_t cap = 16;
        while (cap < expected * 2) cap <<= 1;
        mask_ = cap - 1;
        slots_.resize(cap);
        used_.assign(cap, 0);
    }

    void add(const T& key, u64 delta) {
        std::size_t i = ValueOps<T>::hash(key) & mask_;
        for (;; i = (i + 1) & mask_) {
            if (!used_[i]) {
                used_[i] = 1;
                slots_[i] = {key, delta};
                ++size_;
                if (size_ * 2 > mask_ + 1) grow();
                return;
            }
            if (slots_[i].first == key) {
                slots_[i].second += delta;
                return;
            }
        }
    }

    const u64* find(const T& key) const {
        std::size_t i = ValueOps<T>::hash(key) & mask_;
        for (;; i = (i + 1) & mask_) {
            if (!used_[i]) return nullptr;
            if (slots_[i].first == key) return &slots_[i].second;
        }
    }

  private:
    void grow() {
        FlatMap bigger((mask_ + 1) * 2);
        for (std::size_t i = 0; i <= mask_; ++i)
            if (used_[i]) bigger.add(slots_[i].first, slots_[i].second);
        *this = std::move(bigger);
    }

    std::vector<std::pair<T, u64>> slots_;
    std::vector<std::uint8_t> used_;
    std::size_t mask_ = 0, size_ = 0;
};

// ---- Enumeration core -------------------------------------------------------

namespace detail {

// Product of list sizes in [from, to), saturated just above the sum cap.
template <typename T>
u64 combo_count(const std::vector<KsumList<T>>& lists, std::size_t from, std::size_t to) {
    u64 cap = sum_cap();
    u64 p = 1;
    for (std::size_t j = from; j < to; ++j) {
        std::size_t n = lists[j].size();
        if (n == 0) return 0;
        if (p > (cap + 1) / n + 1) return cap + 1;
        p *= n;
        if (p > cap) return cap + 1;
    }
    return p;
}

// Visit every one-value-per-list combination of lists[from, to) with its sum
// and multiplicity product. fn returning true stops early. Returns true when
// stopped. Partial sums are maintained per level, so stepping the innermost
// index costs one addition.
template <typename T, typename Fn>
bool for_each_sum(const std::vector<KsumList<T>>& lists, std::size_t from, std::size_t to,
                  const Fn& fn) {
    if (from == to) return fn(T{}, u64{1});
    const std::size_t levels = to - from;
    for (std::size_t j = from; j < to; ++j)
        if (lists[j].size() == 0) return false;
    std::vector<std::size_t> idx(levels, 0);
    std::vector<T> psum(levels);
    std::vector<u64> pw(levels);
    auto recompute = [&](std::size_t c) {
        for (std::size_t l = c; l < levels; ++l) {
            const auto& list = lists[from + l];
            psum[l] = (l ? psum[l - 1] : T{}) + list.values[idx[l]];
            pw[l] = (l ? pw[l - 1] : u64{1}) * list.mults[idx[l]];
        }
    };
    recompute(0);
    for (;;) {
        if (fn(psum[levels - 1], pw[levels - 1])) return true;
        std::size_t c = levels;
        while (c-- > 0) {
            if (++idx[c] < lists[from + c].size()) break;
            idx[c] = 0;
            if (c == 0) return false;
        }
        recompute(c);
    }
}

}  // namespace detail

// ---- Decision and counting --------------------------------------------------

// Meet in the middle: hash the sums of one half, stream the other half
// against it. The table is built from whichever half enumerates fewer sums
// (semantics are symmetric, memory is not); the streamed half exits early on
// the first witness.
template <typename T>
bool solve(const KsumInstance<T>& in) {
    const std::size_t k = in.k();
    if (k == 0) return in.target == T{};
    for (const auto& l : in.lists)
        if (l.size() == 0) return false;
    std::size_t h = (k + 1) / 2;
    u64 p_lo = detail::combo_count(in.lists, 0, h);
    u64 p_hi = detail::combo_count(in.lists, h, k);
    std::size_t tf = 0, tt = h, pf = h, pt = k;  // table [tf,tt), probe [pf,pt)
    if (p_lo > p_hi) {
        tf = h, tt = k, pf = 0, pt = h;
        std::swap(p_lo, p_hi);
    }
    if (p_lo > sum_cap()) throw ResourceLimit("half-sum table exceeds the sum cap");
    FlatMap<T> table(static_cast<std::size_t>(p_lo));
    detail::for_each_sum(in.lists, tf, tt, [&](const T& s, u64) {
        table.add(s, 1);
        return false;
    });
    return detail::for_each_sum(in.lists, pf, pt, [&](const T& s, u64) {
        return table.find(in.target - s) != nullptr;
    });
}

// Weighted witness count; the table side is the first ceil(k/2) lists.
template <typename T>
u64 count(const KsumInstance<T>& in) {
    const std::size_t k = in.k();
    if (k == 0) return in.target == T{} ? 1 : 0;
    std::size_t h = (k + 1) / 2;
    if (detail::combo_count(in.lists, 0, h) > sum_cap())
        throw ResourceLimit("half-sum table exceeds the sum cap");
    FlatMap<T> table(static_cast<std::size_t>(detail::combo_count(in.lists, 0, h)));
    detail::for_each_sum(in.lists, 0, h, [&](const T& s, u64 w) {
        table.add(s, w);
        return false;
    });
    u64 total = 0;
    detail::for_each_sum(in.lists, h, k, [&](const T& s, u64 w) {
        if (const u64* hit = table.find(in.target - s)) total += *hit * w;
        return false;
    });
    return total;
}

// Three lists only: for every value of the first list, the weighted number of
// (second, third) completions, via one pair table. Entry i corresponds to
// lists[0].values[i] and deliberately excludes that value's own multiplicity.
template <typename T>
std::vector<u64> count_allints_3(const KsumInstance<T>& in) {
    if (in.k() != 3) throw std::invalid_argument("count_allints_3 needs exactly three lists");
    if (detail::combo_count(in.lists, 1, 3) > sum_cap())
        throw ResourceLimit("pair table exceeds the sum cap");
    FlatMap<T> pairs(static_cast<std::size_t>(detail::combo_count(in.lists, 1, 3)));
    detail::for_each_sum(in.lists, 1, 3, [&](const T& s, u64 w) {
        pairs.add(s, w);
        return false;
    });
    std::vector<u64> out(in.lists[0].size(), 0);
    for (std::size_t i = 0; i < in.lists[0].size(); ++i)
        if (const u64* hit = pairs.find(in.target - in.lists[0].values[i])) out[i] = *hit;
    return out;
}

// ---- Multiplicity elimination -----------------------------------------------

template <typename T>
struct ExpandedKsum {
    KsumInstance<T> instance;  // every multiplicity 1; instance.target unused
    std::vector<T> targets;    // original weighted count = sum of plain counts
};

// Replace value v of multiplicity n by the n distinct values D*v + 0..n-1
// where D = k * max-multiplicity. Any tuple of copies has remainder sum in
// [0, k*(M-1)], strictly below D, so copy tuples hitting D*t + s for some
// s in that band correspond exactly to original tuples hitting t: the copy
// choice per position recovers the multiplicity weight, and no other original
// sum can reach the band since consecutive D*u are D apart.
template <typename T>
ExpandedKsum<T> expand_bounded(const KsumInstance<T>& in) {
    const std::size_t k = in.k();
    if (k == 0) throw std::invalid_argument("expand_bounded needs at least one list");
    u64 max_mult = 1;
    u64 total_out = 0;
    for (const auto& l : in.lists)
        for (u64 m : l.mults) {
            max_mult = std::max(max_mult, m);
            total_out += m;
        }
    if (total_out > sum_cap()) throw ResourceLimit("expansion exceeds the sum cap");
    const u64 d = static_cast<u64>(k) * max_mult;
    const T stride = T(static_cast<i64>(d));

    ExpandedKsum<T> out;
    out.instance.lists.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        const auto& src = in.lists[j];
        for (std::size_t i = 0; i < src.size(); ++i) {
            T base = src.values[i] * stride;
            for (u64 r = 0; r < src.mults[i]; ++r)
                out.instance.lists[j].add(base + T(static_cast<i64>(r)), 1);
        }
    }
    T base_target = in.target * stride;
    const u64 band = static_cast<u64>(k) * (max_mult - 1);
    out.targets.reserve(static_cast<std::size_t>(band) + 1);
    for (u64 s = 0; s <= band; ++s) out.targets.push_back(base_target + T(static_cast<i64>(s)));
    out.instance.target = out.targets.front();
    return out;
}

// Split values at multiplicity theta: light tuples are counted exactly via
// expand_bounded, tuples containing a heavy value are grouped by their first
// heavy position and finished with (k-1)-list weighted counts. Odd k only;
// even prefixes are outside this routine's contract.
template <typename T>
u64 count_heavylight(const KsumInstance<T>& in, u64 theta) {
    const std::size_t k = in.k();
    if (k == 0 || k % 2 == 0)
        throw std::invalid_argument("count_heavylight needs an odd number of lists");
    if (theta == 0) throw std::invalid_argument("theta must be at least 1");

    auto light_part = [&](const KsumList<T>& l) {
        KsumList<T> out;
        for (std::size_t i = 0; i < l.size(); ++i)
            if (l.mults[i] <= theta) out.add(l.values[i], l.mults[i]);
        return out;
    };

    KsumInstance<T> light;
    light.target = in.target;
    for (const auto& l : in.lists) light.lists.push_back(light_part(l));

    u64 total = 0;
    ExpandedKsum<T> ex = expand_bounded(light);
    for (const T& tgt : ex.targets) {
        ex.instance.target = tgt;
        total += count(ex.instance);
    }

    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t v = 0; v < in.lists[i].size(); ++v) {
            if (in.lists[i].mults[v] <= theta) continue;
            KsumInstance<T> sub;
            sub.target = in.target - in.lists[i].values[v];
            for (std::size_t p = 0; p < k; ++p) {
                if (p == i) continue;
                sub.lists.push_back(p < i ? light_part(in.lists[p]) : in.lists[p]);
            }
            total += in.lists[i].mults[v] * count(sub);
        }
    }
    return total;
}

// ---- Text format --------------------------------------------------------

// Line 1: "k target". Then k lines, each a whitespace-separated run of
// "value" or "value:multiplicity" tokens. Values must be distinct per line.
template <typename T>
KsumInstance<T> parse_ksum(const std::string& text);

template <typename T>
std::string format_ksum(const KsumInstance<T>& in);

extern template KsumInstance<i128> parse_ksum<i128>(const std::string&);
extern template KsumInstance<BigInt> parse_ksum<BigInt>(const std::string&);
extern template std::string format_ksum<i128>(const KsumInstance<i128>&);
extern template std::string format_ksum<BigInt>(const KsumInstance<BigInt>&);

}  // namespace liaset::ksum
