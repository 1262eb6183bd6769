#include "liaset/geometry.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace liaset {

using nlohmann::json;

bool Interval::contains(Rat q) const {
    if (q.den <= 0) throw std::invalid_argument("rational denominator must be positive");
    if (lo != kNegInf) {
        i128 lhs = i128(q.num), rhs = i128(lo) * q.den;
        if (lo_open ? lhs <= rhs : lhs < rhs) return false;
    }
    if (hi != kPosInf) {
        i128 lhs = i128(q.num), rhs = i128(hi) * q.den;
        if (hi_open ? lhs >= rhs : lhs > rhs) return false;
    }
    return true;
}

bool Box::full_dimensional() const {
    return std::none_of(ivs.begin(), ivs.end(), [](const Interval& iv) { return iv.degenerate(); });
}

bool Box::contains(const std::vector<Rat>& p) const {
    if (p.size() != ivs.size()) throw std::invalid_argument("query dimension mismatch");
    for (std::size_t i = 0; i < ivs.size(); ++i)
        if (!ivs[i].contains(p[i])) return false;
    return true;
}

bool Box::contains(const Vec& p) const {
    if (p.size() != ivs.size()) throw std::invalid_argument("query dimension mismatch");
    for (std::size_t i = 0; i < ivs.size(); ++i)
        if (!ivs[i].contains(p[i])) return false;
    return true;
}

// ---- JSON ------------------------------------------------------------------

std::string boxes_to_json(const std::vector<Box>& boxes) {
    json arr = json::array();
    for (const Box& b : boxes) {
        json lo = json::array(), hi = json::array();
        json lo_open = json::array(), hi_open = json::array();
        for (const Interval& iv : b.ivs) {
            lo.push_back(iv.lo);
            hi.push_back(iv.hi);
            lo_open.push_back(iv.lo_open);
            hi_open.push_back(iv.hi_open);
        }
        arr.push_back(json{{"lo", lo}, {"hi", hi}, {"lo_open", lo_open}, {"hi_open", hi_open}});
    }
    return arr.dump();
}

std::vector<Box> boxes_from_json(const std::string& text) {
    json arr = json::parse(text);
    if (!arr.is_array()) throw std::invalid_argument("box list must be a JSON array");
    std::vector<Box> out;
    for (const json& jb : arr) {
        Box b;
        const auto& lo = jb.at("lo");
        const auto& hi = jb.at("hi");
        const auto& lo_open = jb.at("lo_open");
        const auto& hi_open = jb.at("hi_open");
        if (lo.size() != hi.size() || lo.size() != lo_open.size() || lo.size() != hi_open.size())
            throw std::invalid_argument("box field lengths disagree");
        for (std::size_t i = 0; i < lo.size(); ++i) {
            Interval iv;
            iv.lo = lo[i].get<i64>();
            iv.hi = hi[i].get<i64>();
            iv.lo_open = lo_open[i].get<bool>();
            iv.hi_open = hi_open[i].get<bool>();
            b.ivs.push_back(iv);
        }
        out.push_back(std::move(b));
    }
    return out;
}

std::string cubes_to_json(const CubeSet& cubes) {
    json corners = json::array();
    for (const Vec& c : cubes.corners) corners.push_back(c);
    return json{{"side", cubes.side}, {"corners", corners}}.dump();
}

CubeSet cubes_from_json(const std::string& text) {
    json j = json::parse(text);
    CubeSet out;
    out.side = j.at("side").get<i64>();
    for (const json& jc : j.at("corners")) {
        if (!jc.is_array() || jc.size() != 3)
            throw std::invalid_argument("cube corners must be 3-dimensional");
        out.corners.push_back(jc.get<Vec>());
    }
    return out;
}

i128 boxes_volume(const std::vector<Box>& boxes) {
    i128 total = 0;
    for (const Box& b : boxes) {
        if (!b.full_dimensional()) continue;
        i128 vol = 1;
        for (const Interval& iv : b.ivs) {
            if (iv.lo == Interval::kNegInf || iv.hi == Interval::kPosInf)
                throw std::invalid_argument("volume of an unbounded box");
            vol *= i128(iv.hi) - iv.lo;
        }
        total += vol;
    }
    return total;
}

std::string rects_to_json(const std::vector<Rect>& rects) {
    json arr = json::array();
    for (const Rect& r : rects) arr.push_back(json::array({r.x1, r.x2, r.y1, r.y2}));
    return arr.dump();
}

std::vector<Rect> rects_from_json(const std::string& text) {
    json arr = json::parse(text);
    if (!arr.is_array()) throw std::invalid_argument("rectangle list must be a JSON array");
    std::vector<Rect> out;
    for (const json& jr : arr) {
        if (!jr.is_array() || jr.size() != 4)
            throw std::invalid_argument("rectangle entries must be [x1,x2,y1,y2]");
        out.push_back({jr[0].get<i64>(), jr[1].get<i64>(), jr[2].get<i64>(), jr[3].get<i64>()});
    }
    return out;
}

// ---- 2D decomposition --------------------------------------------------------

namespace {

Interval closed_point(i64 v) { return {v, v, false, false}; }
Interval open_iv(i64 lo, i64 hi) { return {lo, hi, true, true}; }

// Disjoint union of closed intervals; touching intervals merge.
std::vector<std::pair<i64, i64>> merge_closed(std::vector<std::pair<i64, i64>> ivs) {
    std::sort(ivs.begin(), ivs.end());
    std::vector<std::pair<i64, i64>> out;
    for (const auto& [lo, hi] : ivs) {
        if (!out.empty() && lo <= out.back().second)
            out.back().second = std::max(out.back().second, hi);
        else
            out.emplace_back(lo, hi);
    }
    return out;
}

}  // namespace

std::vector<Box> decompose_rectilinear_2d(const std::vector<Rect>& rects) {
    if (rects.empty()) throw std::invalid_argument("need at least one rectangle");
    for (const Rect& r : rects)
        if (r.x1 >= r.x2 || r.y1 >= r.y2)
            throw std::invalid_argument("rectangles must have positive area");

    std::vector<i64> xs;
    xs.reserve(2 * rects.size());
    for (const Rect& r : rects) {
        xs.push_back(r.x1);
        xs.push_back(r.x2);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<Box> out;
    Interval run_x;                            // x-extent of the pending run
    std::vector<std::pair<i64, i64>> run_ys;   // its merged y-cross-section
    bool have_run = false;
    auto flush = [&] {
        if (!have_run) return;
        for (const auto& [c, d] : run_ys)
            out.push_back(Box{{run_x, Interval{c, d, false, false}}});
        have_run = false;
    };

    // Alternate vertical lines and the open strips between them; the
    // cross-section is constant on each piece, so consecutive pieces with
    // identical merged y-runs fuse into one wider box per run. Output size
    // is the total cross-section change along the sweep, not the grid size.
    for (std::size_t i = 0; i < 2 * xs.size() - 1; ++i) {
        const bool line = i % 2 == 0;
        const i64 a = xs[i / 2];
        const i64 b = line ? a : xs[i / 2 + 1];
        std::vector<std::pair<i64, i64>> active;
        for (const Rect& r : rects)
            if (r.x1 <= a && (line ? a : b) <= r.x2) active.emplace_back(r.y1, r.y2);
        if (active.empty()) {
            flush();
            continue;
        }
        std::vector<std::pair<i64, i64>> ys = merge_closed(std::move(active));
        Interval x = line ? closed_point(a) : open_iv(a, b);
        if (have_run && run_ys == ys && run_x.hi == x.lo && run_x.hi_open != x.lo_open) {
            run_x.hi = x.hi;
            run_x.hi_open = x.hi_open;
        } else {
            flush();
            run_x = x;
            run_ys = std::move(ys);
            have_run = true;
        }
    }
    flush();
    return out;
}

// ---- 3D decomposition --------------------------------------------------------

namespace {

i64 floor_div(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    return r != 0 && (r < 0) != (b < 0) ? q - 1 : q;
}

// One cube clipped to the half-open slab [q*s, (q+1)*s): since the cube's
// height equals the slab height it either rests on the slab floor (covering
// [zl, edge], where edge may equal zl for a cube ending exactly there) or
// enters from above (covering [edge, zh)).
struct SlabCube {
    i64 x1, x2, y1, y2;
    bool from_floor;
    i64 edge;  // from_floor: top of the cover, capped at zh; else entry height
};

// Merge pairs of boxes that differ only along `axis` and touch there; one
// linear pass over the boxes sorted with `axis` last. Returns whether any
// pair fused.
bool fuse_axis(std::vector<Box>& boxes, std::size_t axis) {
    const std::size_t u = axis == 0 ? 1 : 0, v = axis == 2 ? 1 : 2;
    std::sort(boxes.begin(), boxes.end(), [&](const Box& p, const Box& q) {
        return std::tie(p.ivs[u], p.ivs[v], p.ivs[axis]) <
               std::tie(q.ivs[u], q.ivs[v], q.ivs[axis]);
    });
    std::vector<Box> fused;
    fused.reserve(boxes.size());
    bool changed = false;
    for (Box& b : boxes) {
        if (!fused.empty()) {
            Box& p = fused.back();
            if (p.ivs[u] == b.ivs[u] && p.ivs[v] == b.ivs[v] &&
                p.ivs[axis].hi == b.ivs[axis].lo && p.ivs[axis].hi_open != b.ivs[axis].lo_open) {
                p.ivs[axis].hi = b.ivs[axis].hi;
                p.ivs[axis].hi_open = b.ivs[axis].hi_open;
                changed = true;
                continue;
            }
        }
        fused.push_back(std::move(b));
    }
    boxes.swap(fused);
    return changed;
}

// Covered z-set of one column within [zl, zh): the union of [zl, ceil_cover]
// and [floor_cover, zh), either possibly absent.
struct ColumnState {
    i64 ceil_cover;   // highest z anchored to the floor; zl - 1 if none
    i64 floor_cover;  // lowest entry height from above; zh if none

    auto operator<=>(const ColumnState&) const = default;
};

std::vector<Interval> column_menu(const ColumnState& st, i64 zl, i64 zh) {
    std::vector<Interval> menu;
    if (st.ceil_cover < zl && st.floor_cover == zh) return menu;  // column empty
    if (st.ceil_cover >= zh || st.floor_cover <= st.ceil_cover) {
        menu.push_back({zl, zh, false, true});  // the two covers connect
        return menu;
    }
    if (st.ceil_cover >= zl) menu.push_back({zl, st.ceil_cover, false, false});
    if (st.floor_cover < zh) menu.push_back({st.floor_cover, zh, false, true});
    return menu;
}

// y-interval plus the column's z-pieces; a slab x-piece emits a list of these.
struct YEntry {
    Interval y;
    std::vector<Interval> z;

    bool operator==(const YEntry&) const = default;
};

// Sweep one x-piece of a slab in y, merging adjacent columns (line or strip)
// whose z-menus coincide.
std::vector<YEntry> sweep_columns(const std::vector<const SlabCube*>& active, i64 zl, i64 zh) {
    std::vector<i64> ys;
    for (const SlabCube* c : active) {
        ys.push_back(c->y1);
        ys.push_back(c->y2);
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    std::vector<YEntry> menu;
    for (std::size_t i = 0; i < 2 * ys.size() - 1; ++i) {
        const bool line = i % 2 == 0;
        const i64 a = ys[i / 2];
        const i64 b = line ? a : ys[i / 2 + 1];
        ColumnState st{zl - 1, zh};
        for (const SlabCube* c : active) {
            bool covers = line ? (c->y1 <= a && a <= c->y2) : (c->y1 <= a && b <= c->y2);
            if (!covers) continue;
            if (c->from_floor)
                st.ceil_cover = std::max(st.ceil_cover, c->edge);
            else
                st.floor_cover = std::min(st.floor_cover, c->edge);
        }
        std::vector<Interval> z = column_menu(st, zl, zh);
        if (z.empty()) continue;
        Interval y = line ? closed_point(a) : open_iv(a, b);
        if (!menu.empty() && menu.back().z == z && menu.back().y.hi == y.lo &&
            menu.back().y.hi_open != y.lo_open) {
            menu.back().y.hi = y.hi;  // contiguous equal column: extend
            menu.back().y.hi_open = y.hi_open;
        } else {
            menu.push_back({y, std::move(z)});
        }
    }
    return menu;
}

}  // namespace

std::vector<Box> decompose_cubes_3d(const CubeSet& cubes) {
    if (cubes.side <= 0) throw std::invalid_argument("cube side must be positive");
    for (const Vec& c : cubes.corners)
        if (c.size() != 3) throw std::invalid_argument("cube corners must be 3-dimensional");
    std::vector<Box> out;
    if (cubes.corners.empty()) return out;
    const i64 s = cubes.side;

    i64 zmin = cubes.corners[0][2], zmax = cubes.corners[0][2];
    for (const Vec& c : cubes.corners) {
        zmin = std::min(zmin, c[2]);
        zmax = std::max(zmax, c[2]);
    }
    // Half-open slabs [q*s, (q+1)*s) tile all of z; the extra slab past zmax
    // catches top faces resting exactly on the last boundary.
    for (i64 q = floor_div(zmin, s); q * s <= zmax + s; ++q) {
        const i64 zl = q * s, zh = (q + 1) * s;
        std::vector<SlabCube> slab;
        for (const Vec& c : cubes.corners) {
            if (c[2] + s < zl || c[2] >= zh) continue;
            bool from_floor = c[2] <= zl;
            slab.push_back({c[0], c[0] + s, c[1], c[1] + s, from_floor,
                            from_floor ? std::min(c[2] + s, zh) : c[2]});
        }
        if (slab.empty()) continue;

        std::vector<i64> xs;
        for (const SlabCube& c : slab) {
            xs.push_back(c.x1);
            xs.push_back(c.x2);
        }
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

        Interval pending_x;  // accumulates equal-menu x-pieces
        std::vector<YEntry> pending;
        auto flush = [&]() {
            for (const YEntry& ye : pending)
                for (const Interval& zi : ye.z) out.push_back(Box{{pending_x, ye.y, zi}});
            pending.clear();
        };
        for (std::size_t i = 0; i < 2 * xs.size() - 1; ++i) {
            const bool line = i % 2 == 0;
            const i64 a = xs[i / 2];
            const i64 b = line ? a : xs[i / 2 + 1];
            std::vector<const SlabCube*> active;
            for (const SlabCube& c : slab) {
                bool covers = line ? (c.x1 <= a && a <= c.x2) : (c.x1 <= a && b <= c.x2);
                if (covers) active.push_back(&c);
            }
            std::vector<YEntry> menu =
                active.empty() ? std::vector<YEntry>{} : sweep_columns(active, zl, zh);
            Interval x = line ? closed_point(a) : open_iv(a, b);
            if (menu.empty()) {
                flush();
                continue;
            }
            if (!pending.empty() && pending == menu && pending_x.hi == x.lo &&
                pending_x.hi_open != x.lo_open) {
                pending_x.hi = x.hi;
                pending_x.hi_open = x.hi_open;
            } else {
                flush();
                pending = std::move(menu);
                pending_x = x;
            }
        }
        flush();
    }

    // Fuse touching boxes that differ along one axis only, until no pair is
    // left: splits forced by the slab boundaries vanish wherever the xy
    // structure repeats across slabs (deep stacks, dense interiors), and the
    // z-fusions in turn expose y- and x-mergeable neighbors.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t axis : {std::size_t{2}, std::size_t{1}, std::size_t{0}})
            changed = fuse_axis(out, axis) || changed;
    }
    return out;
}

// ---- Grid arrangement oracle --------------------------------------------------

namespace {

// piece p over sorted cuts: even p = the point cuts[p/2], odd p = the open
// interval (cuts[p/2], cuts[p/2+1]); sample deep inside via thirds.
Rat piece_sample(const std::vector<i64>& cuts, std::size_t p) {
    if (p % 2 == 0) return Rat::of(cuts[p / 2]);
    i64 lo = cuts[p / 2], hi = cuts[p / 2 + 1];
    return {lo * 3 + (hi - lo), 3};  // lo + (hi-lo)/3, exact
}

// piece of the cut grid containing q, or npos when q lies outside every piece
std::size_t locate(const std::vector<i64>& cuts, Rat q) {
    if (cuts.empty()) return std::string::npos;
    // first cut index with cuts[i] >= q, by exact comparison
    std::size_t n = cuts.size(), lo = 0, hi = n;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (i128(cuts[mid]) * q.den >= i128(q.num))
            hi = mid;
        else
            lo = mid + 1;
    }
    if (lo == n) return std::string::npos;  // beyond the last cut
    if (i128(cuts[lo]) * q.den == i128(q.num)) return 2 * lo;
    if (lo == 0) return std::string::npos;  // before the first cut
    return 2 * lo - 1;
}

}  // namespace

std::size_t GridArrangement::piece_count() const {
    std::size_t total = 1;
    for (int axis = 0; axis < 3; ++axis) total *= axis_pieces(axis);
    return total;
}

std::size_t GridArrangement::inside_open_cells() const {
    std::size_t nx = axis_pieces(0), ny = axis_pieces(1), nz = axis_pieces(2);
    std::size_t total = 0;
    for (std::size_t px = 1; px < nx; px += 2)
        for (std::size_t py = 1; py < ny; py += 2)
            for (std::size_t pz = 1; pz < nz; pz += 2)
                total += inside[(px * ny + py) * nz + pz];
    return total;
}

bool GridArrangement::contains(const std::array<Rat, 3>& p) const {
    std::size_t idx[3];
    for (int axis = 0; axis < 3; ++axis) {
        idx[axis] = locate(cuts[axis], p[axis]);
        if (idx[axis] == std::string::npos) return false;
    }
    return inside[(idx[0] * axis_pieces(1) + idx[1]) * axis_pieces(2) + idx[2]] != 0;
}

i128 GridArrangement::covered_volume() const {
    std::size_t nx = axis_pieces(0), ny = axis_pieces(1), nz = axis_pieces(2);
    i128 total = 0;
    for (std::size_t px = 1; px < nx; px += 2)
        for (std::size_t py = 1; py < ny; py += 2)
            for (std::size_t pz = 1; pz < nz; pz += 2) {
                if (!inside[(px * ny + py) * nz + pz]) continue;
                i128 vol = i128(cuts[0][px / 2 + 1] - cuts[0][px / 2]);
                vol *= cuts[1][py / 2 + 1] - cuts[1][py / 2];
                vol *= cuts[2][pz / 2 + 1] - cuts[2][pz / 2];
                total += vol;
            }
    return total;
}

bool point_in_cubes(const CubeSet& cubes, const std::array<Rat, 3>& p) {
    for (const Vec& c : cubes.corners) {
        bool in = true;
        for (int axis = 0; axis < 3 && in; ++axis) {
            Interval iv{c[axis], c[axis] + cubes.side, false, false};
            in = iv.contains(p[axis]);
        }
        if (in) return true;
    }
    return false;
}

GridArrangement grid_arrangement_oracle(const CubeSet& cubes) {
    if (cubes.side <= 0) throw std::invalid_argument("cube side must be positive");
    GridArrangement out;
    if (cubes.corners.empty()) return out;
    for (const Vec& c : cubes.corners) {
        if (c.size() != 3) throw std::invalid_argument("cube corners must be 3-dimensional");
        for (int axis = 0; axis < 3; ++axis) {
            out.cuts[axis].push_back(c[axis]);
            out.cuts[axis].push_back(c[axis] + cubes.side);
        }
    }
    // refine z with the slab planes so samples probe both sides of each slice
    i64 zmin = cubes.corners[0][2], zmax = cubes.corners[0][2];
    for (const Vec& c : cubes.corners) {
        zmin = std::min(zmin, c[2]);
        zmax = std::max(zmax, c[2]);
    }
    for (i64 q = floor_div(zmin, cubes.side); q * cubes.side <= zmax + cubes.side; ++q)
        out.cuts[2].push_back(q * cubes.side);
    for (int axis = 0; axis < 3; ++axis) {
        auto& cs = out.cuts[axis];
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    }

    std::size_t nx = out.axis_pieces(0), ny = out.axis_pieces(1), nz = out.axis_pieces(2);
    out.inside.assign(nx * ny * nz, 0);
    for (std::size_t px = 0; px < nx; ++px)
        for (std::size_t py = 0; py < ny; ++py)
            for (std::size_t pz = 0; pz < nz; ++pz) {
                std::array<Rat, 3> sample{piece_sample(out.cuts[0], px),
                                          piece_sample(out.cuts[1], py),
                                          piece_sample(out.cuts[2], pz)};
                out.inside[(px * ny + py) * nz + pz] = point_in_cubes(cubes, sample) ? 1 : 0;
            }
    return out;
}

// ---- Orthant cubes -------------------------------------------------------------

Box orthant_to_cube(unsigned vk, unsigned vj, const Vec& c, i64 m_bound) {
    if (vk & vj) throw std::invalid_argument("orthant sign sets must be disjoint");
    if ((vk | vj) >> 3) throw std::invalid_argument("orthant dimensions beyond 3");
    if (c.size() != 3) throw std::invalid_argument("orthant corner must be 3-dimensional");
    if (m_bound <= 0) throw std::invalid_argument("data bound must be positive");
    Box out;
    for (unsigned u = 0; u < 3; ++u) {
        Interval iv;
        if (vk & (1u << u)) {
            iv = {-2 * m_bound + c[u], c[u], false, false};
        } else if (vj & (1u << u)) {
            iv = {c[u] + 1, 2 * m_bound + c[u] + 1, false, false};
        } else {
            iv = {-m_bound, m_bound, false, false};
        }
        out.ivs.push_back(iv);
    }
    return out;
}

}  // namespace liaset
