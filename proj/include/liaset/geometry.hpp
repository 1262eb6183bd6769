#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "liaset/config.hpp"

namespace liaset {

// Exact rational scalar, denominator positive. Decomposition boundaries mix
// open and closed endpoints, so membership tests compare num/den against
// integer bounds by cross-multiplication and never touch floating point.
struct Rat {
    i64 num = 0;
    i64 den = 1;

    static Rat of(i64 v) { return {v, 1}; }
};

// One proper interval: endpoints are integers or the int64 min/max infinity
// sentinels. A degenerate interval (lo == hi) is closed on both sides.
struct Interval {
    static constexpr i64 kNegInf = std::numeric_limits<i64>::min();
    static constexpr i64 kPosInf = std::numeric_limits<i64>::max();

    i64 lo = kNegInf;
    i64 hi = kPosInf;
    bool lo_open = false;
    bool hi_open = false;

    auto operator<=>(const Interval&) const = default;

    bool degenerate() const { return lo == hi && lo != kNegInf && hi != kPosInf; }
    bool contains(Rat q) const;
    bool contains(i64 v) const { return contains(Rat::of(v)); }
};

struct Box {
    std::vector<Interval> ivs;

    auto operator<=>(const Box&) const = default;

    std::size_t dim() const { return ivs.size(); }
    bool full_dimensional() const;  // no degenerate interval
    bool contains(const std::vector<Rat>& p) const;
    bool contains(const Vec& p) const;
};

std::string boxes_to_json(const std::vector<Box>& boxes);
std::vector<Box> boxes_from_json(const std::string& text);

// Total measure of the full-dimensional boxes: sum of side-length products.
// Openness does not change a side's length; lower-dimensional boxes carry no
// measure. Throws on an unbounded side.
i128 boxes_volume(const std::vector<Box>& boxes);

// Closed axis-aligned rectangle with positive area.
struct Rect {
    i64 x1 = 0, x2 = 0, y1 = 0, y2 = 0;
};

// JSON: [[x1,x2,y1,y2],...].
std::string rects_to_json(const std::vector<Rect>& rects);
std::vector<Rect> rects_from_json(const std::string& text);

// Axis-aligned congruent cubes: one shared side, closed [corner, corner+side]
// per dimension. JSON: {"side":s,"corners":[[x,y,z],...]}.
struct CubeSet {
    i64 side = 1;
    std::vector<Vec> corners;
};

std::string cubes_to_json(const CubeSet& cubes);
CubeSet cubes_from_json(const std::string& text);

// Partition of the union of closed rectangles into pairwise disjoint boxes.
// Sweep over the x-grid of rectangle edges: each vertical line or open strip
// gets the merged y-intervals of the rectangles spanning it, and consecutive
// pieces with identical cross-sections fuse into one box per y-run, so the
// output grows with the number of cross-section changes rather than with the
// grid. Throws on an empty list or a zero-area rectangle.
std::vector<Box> decompose_rectilinear_2d(const std::vector<Rect>& rects);

// Partition of the union of the cubes into pairwise disjoint 3D boxes.
// z-space is sliced into half-open slabs [q*side, (q+1)*side), so every cube
// meets at most two slabs and within a slab covers every column it touches
// from the floor up or from some entry height to the ceiling; per column that
// leaves at most two z-runs (a cube ending exactly on a slab floor leaves its
// top face as a degenerate run). Each slab is swept in x and y, merging
// adjacent columns and strips whose run menus coincide.
std::vector<Box> decompose_cubes_3d(const CubeSet& cubes);

// Reference decomposition: the full grid arrangement from all distinct cube
// coordinates per axis (plus the slab multiples on z), every piece classified
// by direct cube membership. Cubic piece count; testing only.
struct GridArrangement {
    std::array<std::vector<i64>, 3> cuts;  // sorted distinct, per axis
    std::vector<char> inside;              // flat index over per-axis pieces

    std::size_t axis_pieces(int axis) const {
        return cuts[axis].empty() ? 0 : 2 * cuts[axis].size() - 1;
    }
    std::size_t piece_count() const;
    std::size_t inside_open_cells() const;
    bool contains(const std::array<Rat, 3>& p) const;
    i128 covered_volume() const;
};
GridArrangement grid_arrangement_oracle(const CubeSet& cubes);

// Direct membership in the union of the cubes, exact on rationals.
bool point_in_cubes(const CubeSet& cubes, const std::array<Rat, 3>& p);

// The closed side-2M cube whose intersection with the data range [-M, M]^3 is
// exactly the orthant {s : s[u] <= c[u] for u in vk, s[u] > c[u] for u in vj}.
// vk and vj are disjoint bitmasks over dimensions {0,1,2}; dimensions in
// neither stay [-M, M]. Requires every |c[u]| <= M/2 so the cube actually
// clears the data range on the constrained sides.
Box orthant_to_cube(unsigned vk, unsigned vj, const Vec& c, i64 m_bound);

}  // namespace liaset
