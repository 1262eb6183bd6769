#pragma once

#include <limits>
#include <memory>
#include <vector>

#include "liaset/config.hpp"

namespace liaset {

// Orthogonal range counting over a fixed multiset of integer points.
// Two interchangeable backends: a layered range tree (one sorted level per
// dimension, O(log^d n) counting) and a linear scan used both as the oracle
// in tests and as the faster choice for small inputs.
class RangeIndex {
  public:
    enum class Backend { Auto, Tree, Scan };

    static constexpr i64 kNegInf = std::numeric_limits<i64>::min();
    static constexpr i64 kPosInf = std::numeric_limits<i64>::max();

    // Closed interval of integers; lo > hi means empty. The infinities are
    // ordinary i64 sentinels, which closed bounds make harmless.
    struct Range {
        i64 lo = kNegInf;
        i64 hi = kPosInf;
    };

    // Closed range equivalent to the possibly-open interval (lo,hi) etc.
    // Valid because all stored points are integer vectors.
    static Range closed_of(i64 lo, bool lo_open, i64 hi, bool hi_open) {
        Range r;
        r.lo = lo_open ? (lo == kPosInf ? kPosInf : lo + 1) : lo;
        r.hi = hi_open ? (hi == kNegInf ? kNegInf : hi - 1) : hi;
        return r;
    }

    // Points must share one dimension. Auto picks Scan below 64 points.
    explicit RangeIndex(std::vector<Vec> points, Backend backend = Backend::Auto);
    ~RangeIndex();
    RangeIndex(RangeIndex&&) noexcept;
    RangeIndex& operator=(RangeIndex&&) noexcept;

    std::size_t size() const { return n_; }
    std::size_t dim() const { return d_; }
    Backend backend() const { return backend_; }

    // Number of stored points (with multiplicity) inside the box.
    u64 count_in_box(const std::vector<Range>& box) const;

    // True iff some stored point p satisfies p[i] >= q[i] for all i.
    bool exists_dominating(const Vec& q) const;

  private:
    struct Level;
    std::size_t n_ = 0, d_ = 0;
    Backend backend_ = Backend::Scan;
    std::vector<Vec> scan_points_;
    std::unique_ptr<Level> tree_;
};

}  // namespace liaset
