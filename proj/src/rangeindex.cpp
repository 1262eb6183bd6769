#include "liaset/rangeindex.hpp"

#include <algorithm>
#include <stdexcept>

namespace liaset {

namespace {
constexpr std::size_t kScanThreshold = 64;
}

// One dimension of the layered tree: points sorted by coordinate `j`, a
// balanced segment hierarchy over that order, and per-node child levels for
// the remaining dimensions. The last dimension needs only the sorted keys.
struct RangeIndex::Level {
    struct Node {
        std::size_t lo, hi;  // index range [lo, hi) in the sorted order
        std::unique_ptr<Level> child;
        std::unique_ptr<Node> left, right;
    };

    std::size_t j, last;  // this level's dimension; total dims - 1
    std::vector<i64> keys;
    std::vector<Vec> pts;  // only kept on inner levels, sorted by coord j
    std::unique_ptr<Node> root;

    Level(std::vector<Vec> points, std::size_t dim_idx, std::size_t dims)
        : j(dim_idx), last(dims - 1) {
        std::sort(points.begin(), points.end(),
                  [&](const Vec& a, const Vec& b) { return a[j] < b[j]; });
        keys.reserve(points.size());
        for (const Vec& p : points) keys.push_back(p[j]);
        if (j == last) return;
        pts = std::move(points);
        root = build(0, pts.size());
    }

    std::unique_ptr<Node> build(std::size_t lo, std::size_t hi) {
        auto node = std::make_unique<Node>();
        node->lo = lo;
        node->hi = hi;
        node->child = std::make_unique<Level>(
            std::vector<Vec>(pts.begin() + lo, pts.begin() + hi), j + 1, last + 1);
        if (hi - lo > 1) {
            std::size_t mid = lo + (hi - lo) / 2;
            node->left = build(lo, mid);
            node->right = build(mid, hi);
        }
        return node;
    }

    u64 count(const std::vector<Range>& box) const {
        const Range& r = box[j];
        if (r.lo > r.hi || keys.empty()) return 0;
        auto i0 = std::lower_bound(keys.begin(), keys.end(), r.lo) - keys.begin();
        auto i1 = std::upper_bound(keys.begin(), keys.end(), r.hi) - keys.begin();
        if (i0 >= i1) return 0;
        if (j == last) return static_cast<u64>(i1 - i0);
        return count_canonical(root.get(), static_cast<std::size_t>(i0),
                               static_cast<std::size_t>(i1), box);
    }

    u64 count_canonical(const Node* node, std::size_t lo, std::size_t hi,
                        const std::vector<Range>& box) const {
        if (!node || node->hi <= lo || node->lo >= hi) return 0;
        if (lo <= node->lo && node->hi <= hi) return node->child->count(box);
        return count_canonical(node->left.get(), lo, hi, box) +
               count_canonical(node->right.get(), lo, hi, box);
    }
};

RangeIndex::RangeIndex(std::vector<Vec> points, Backend backend) {
    n_ = points.size();
    d_ = points.empty() ? 0 : points[0].size();
    for (const Vec& p : points)
        if (p.size() != d_)
            throw std::invalid_argument("range index points must share one dimension");
    if (d_ == 0) n_ = 0;  // no coordinates to index; treat as empty
    backend_ = backend;
    if (backend_ == Backend::Auto)
        backend_ = n_ < kScanThreshold ? Backend::Scan : Backend::Tree;
    if (backend_ == Backend::Tree && n_ > 0)
        tree_ = std::make_unique<Level>(std::move(points), 0, d_);
    else
        scan_points_ = std::move(points);
}

RangeIndex::~RangeIndex() = default;
RangeIndex::RangeIndex(RangeIndex&&) noexcept = default;
RangeIndex& RangeIndex::operator=(RangeIndex&&) noexcept = default;

u64 RangeIndex::count_in_box(const std::vector<Range>& box) const {
    if (box.size() != d_) {
        if (n_ == 0) return 0;
        throw std::invalid_argument("query box dimension mismatch");
    }
    if (tree_) return tree_->count(box);
    u64 total = 0;
    for (const Vec& p : scan_points_) {
        bool inside = true;
        for (std::size_t i = 0; i < d_ && inside; ++i)
            inside = box[i].lo <= p[i] && p[i] <= box[i].hi;
        total += inside;
    }
    return total;
}

bool RangeIndex::exists_dominating(const Vec& q) const {
    if (n_ == 0) return false;
    if (q.size() != d_) throw std::invalid_argument("query point dimension mismatch");
    std::vector<Range> box(d_);
    for (std::size_t i = 0; i < d_; ++i) box[i].lo = q[i];
    return count_in_box(box) > 0;
}

}  // namespace liaset
