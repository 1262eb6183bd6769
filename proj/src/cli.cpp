#include "liaset/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "liaset/baseline.hpp"
#include "liaset/bitreduce.hpp"
#include "liaset/dataset.hpp"
#include "liaset/formula.hpp"
#include "liaset/gen.hpp"
#include "liaset/geometry.hpp"
#include "liaset/ksum.hpp"
#include "liaset/pipelines.hpp"

namespace liaset {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

// One manifest per process run: what ran, on what, and what came out.
// Everything except timings_ms is a pure function of the inputs.
struct RunContext {
    std::string command;
    std::string engine;
    std::vector<std::string> inputs;
    u64 seed = 0;
    json timings = json::object();
    json extra = json::object();  // command-specific manifest fields
    json result = json::object();
    int exit_code = 0;
};

json run_manifest(const RunContext& ctx) {
    json m{{"command", ctx.command}, {"engine", ctx.engine}, {"inputs", ctx.inputs},
           {"result", ctx.result},   {"seed", ctx.seed},     {"timings_ms", ctx.timings}};
    for (const auto& [key, value] : ctx.extra.items()) m[key] = value;
    return m;
}

// Records wall-clock milliseconds for one phase on scope exit.
class PhaseTimer {
  public:
    PhaseTimer(json& sink, const char* phase)
        : sink_(sink), phase_(phase), start_(std::chrono::steady_clock::now()) {}
    ~PhaseTimer() {
        auto dt = std::chrono::steady_clock::now() - start_;
        sink_[phase_] = std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
    }

  private:
    json& sink_;
    const char* phase_;
    std::chrono::steady_clock::time_point start_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path);
}

// ---- Dataset field access ----------------------------------------------------

const std::vector<Vec>& point_list(const Dataset& d, const std::string& name) {
    auto it = d.sets.find(name);
    if (it == d.sets.end()) throw std::runtime_error("dataset is missing set " + name);
    return it->second;
}

std::vector<i64> scalar_list(const Dataset& d, const std::string& name) {
    std::vector<i64> out;
    for (const Vec& v : point_list(d, name)) {
        if (v.size() != 1)
            throw std::runtime_error("set " + name + " must hold one-dimensional points");
        out.push_back(v[0]);
    }
    return out;
}

i64 free_scalar(const Dataset& d, const std::string& name) {
    auto it = d.free.find(name);
    if (it == d.free.end())
        throw std::runtime_error("dataset is missing the free scalar " + name);
    return it->second;
}

void require_existential(const Formula& f, const char* what) {
    for (const QuantSpec& q : f.quants)
        if (q.q != Quant::Exists)
            throw std::runtime_error(std::string(what) + " requires existential prefix");
}

// ---- Decomposition self-checks -------------------------------------------------

// Closed-rectangle membership at a rational point, den > 0 on both axes.
bool in_rect_union(const std::vector<Rect>& rects, Rat x, Rat y) {
    for (const Rect& r : rects)
        if (i128(r.x1) * x.den <= i128(x.num) && i128(x.num) <= i128(r.x2) * x.den &&
            i128(r.y1) * y.den <= i128(y.num) && i128(y.num) <= i128(r.y2) * y.den)
            return true;
    return false;
}

// Cut values, midpoints of consecutive cuts, and one sample beyond each end:
// together they meet every cell of the coordinate arrangement.
std::vector<Rat> axis_samples(std::vector<i64> cuts) {
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Rat> out;
    out.push_back(Rat::of(cuts.front() - 1));
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        out.push_back(Rat::of(cuts[i]));
        if (i + 1 < cuts.size()) {
            i128 mid2 = i128(cuts[i]) + cuts[i + 1];
            out.push_back(Rat{static_cast<i64>(mid2), 2});
        }
    }
    out.push_back(Rat::of(cuts.back() + 1));
    return out;
}

// Every sample of the rectangle-coordinate arrangement must land in exactly
// one box when inside the union and in none outside it.
bool verify_partition_2d(const std::vector<Rect>& rects, const std::vector<Box>& boxes) {
    std::vector<i64> xs, ys;
    for (const Rect& r : rects) {
        xs.push_back(r.x1);
        xs.push_back(r.x2);
        ys.push_back(r.y1);
        ys.push_back(r.y2);
    }
    for (Rat x : axis_samples(xs))
        for (Rat y : axis_samples(ys)) {
            std::vector<Rat> p{x, y};
            std::size_t hits = 0;
            for (const Box& b : boxes) hits += b.contains(p);
            if (hits != (in_rect_union(rects, x, y) ? 1u : 0u)) return false;
        }
    return true;
}

// Exact volume match plus membership agreement on a representative point of
// every piece of the full coordinate grid. Cubic in the cube count.
bool verify_partition_3d(const CubeSet& cubes, const std::vector<Box>& boxes) {
    GridArrangement oracle = grid_arrangement_oracle(cubes);
    if (boxes_volume(boxes) != oracle.covered_volume()) return false;
    std::array<std::vector<Rat>, 3> reps;
    for (int axis = 0; axis < 3; ++axis) {
        const std::vector<i64>& cuts = oracle.cuts[axis];
        for (std::size_t i = 0; i < cuts.size(); ++i) {
            reps[axis].push_back(Rat::of(cuts[i]));
            if (i + 1 < cuts.size()) {
                i128 mid2 = i128(cuts[i]) + cuts[i + 1];
                reps[axis].push_back(Rat{static_cast<i64>(mid2), 2});
            }
        }
    }
    for (Rat x : reps[0])
        for (Rat y : reps[1])
            for (Rat z : reps[2]) {
                bool inside = oracle.contains({x, y, z});
                std::vector<Rat> p{x, y, z};
                std::size_t hits = 0;
                for (const Box& b : boxes) hits += b.contains(p);
                if (hits != (inside ? 1u : 0u)) return false;
            }
    return true;
}

// ---- Command handlers ----------------------------------------------------------

void cmd_decide(RunContext& ctx, const std::string& formula_path, const std::string& data_path,
                const std::string& engine) {
    ctx.command = "decide";
    ctx.engine = engine;
    ctx.inputs = {formula_path, data_path};
    auto eng = engine_from_name(engine);
    if (!eng) throw std::runtime_error("unknown engine '" + engine + "'");
    Formula f = parse_formula(slurp(formula_path));
    Dataset d = dataset_from_json(slurp(data_path));
    std::vector<std::string> notes;
    bool res;
    {
        PhaseTimer t(ctx.timings, "decide");
        res = decide_dispatch(f, d, *eng, &notes);
    }
    ctx.result = json{{"engine", engine}, {"notes", notes}, {"result", res}};
    ctx.exit_code = res ? 0 : 1;
}

void cmd_count(RunContext& ctx, const std::string& formula_path, const std::string& data_path,
               const std::string& engine) {
    ctx.command = "count";
    ctx.engine = engine;
    ctx.inputs = {formula_path, data_path};
    Formula f = parse_formula(slurp(formula_path));
    require_existential(f, "counting");
    Dataset d = dataset_from_json(slurp(data_path));
    u64 total;
    {
        PhaseTimer t(ctx.timings, "count");
        if (engine == "brute") {
            total = brute_count(bind(f, d));
        } else if (engine == "reduction") {
            total = static_cast<u64>(count_family(compile_counting(bind(f, d))));
        } else {
            throw std::runtime_error("count engines: brute, reduction");
        }
    }
    ctx.result = json{{"count", total}, {"engine", engine}};
}

void cmd_reduce(RunContext& ctx, const std::string& formula_path, const std::string& data_path,
                const std::string& out_dir, bool counting) {
    ctx.command = "reduce";
    ctx.engine = counting ? "counting" : "decision";
    ctx.inputs = {formula_path, data_path};
    Formula f = parse_formula(slurp(formula_path));
    require_existential(f, "reduction");
    Dataset d = dataset_from_json(slurp(data_path));
    Family fam;
    {
        PhaseTimer t(ctx.timings, "compile");
        Instance inst = bind(f, d);
        fam = counting ? compile_counting(inst) : compile_decision(inst);
    }
    {
        PhaseTimer t(ctx.timings, "write");
        fs::create_directories(out_dir);
        json entries = json::array();
        for (std::size_t i = 0; i < fam.entries.size(); ++i) {
            const FamilyEntry& entry = fam.entries[i];
            std::string name = "instance_" + std::to_string(i) + ".txt";
            spit((fs::path(out_dir) / name).string(), ksum::format_ksum(entry.instance));
            entries.push_back(json{{"e", entry.e},
                                   {"file", name},
                                   {"group", entry.group},
                                   {"levels", entry.levels},
                                   {"sign", entry.sign},
                                   {"w", entry.w}});
        }
        ctx.extra["entries"] = entries;
        ctx.extra["k"] = fam.k;
    }
    ctx.result = json{{"entries", fam.entries.size()},
                      {"out", out_dir},
                      {"trivially_true", fam.trivially_true}};
    // The manifest next to the instances is what a replay consumes; write it
    // even when no --manifest path was requested.
    spit((fs::path(out_dir) / "manifest.json").string(), run_manifest(ctx).dump() + "\n");
}

void cmd_ksum(RunContext& ctx, bool counting, const std::string& file) {
    ctx.command = counting ? "ksum count" : "ksum solve";
    ctx.inputs = {file};
    auto inst = ksum::parse_ksum<BigInt>(slurp(file));
    PhaseTimer t(ctx.timings, "solve");
    if (counting) {
        ctx.result = json{{"count", ksum::count(inst)}};
    } else {
        bool res = ksum::solve(inst);
        ctx.result = json{{"result", res}};
        ctx.exit_code = res ? 0 : 1;
    }
}

void cmd_geom2d(RunContext& ctx, const std::string& file, bool verify) {
    ctx.command = "geom decompose2d";
    ctx.inputs = {file};
    std::vector<Rect> rects = rects_from_json(slurp(file));
    std::vector<Box> boxes;
    {
        PhaseTimer t(ctx.timings, "decompose");
        boxes = decompose_rectilinear_2d(rects);
    }
    ctx.result = json{{"boxes", json::parse(boxes_to_json(boxes))}, {"count", boxes.size()}};
    if (verify) {
        PhaseTimer t(ctx.timings, "verify");
        bool ok = verify_partition_2d(rects, boxes);
        ctx.result["verified"] = ok;
        ctx.exit_code = ok ? 0 : 1;
    }
}

void cmd_geom3d(RunContext& ctx, const std::string& file, bool verify) {
    ctx.command = "geom decompose3d";
    ctx.inputs = {file};
    CubeSet cubes = cubes_from_json(slurp(file));
    std::vector<Box> boxes;
    {
        PhaseTimer t(ctx.timings, "decompose");
        boxes = decompose_cubes_3d(cubes);
    }
    ctx.result = json{{"boxes", json::parse(boxes_to_json(boxes))},
                      {"count", boxes.size()},
                      {"volume", static_cast<i64>(boxes_volume(boxes))}};
    if (verify) {
        PhaseTimer t(ctx.timings, "verify");
        bool ok = verify_partition_3d(cubes, boxes);
        ctx.result["verified"] = ok;
        ctx.exit_code = ok ? 0 : 1;
    }
}

void cmd_pareto_verify(RunContext& ctx, const std::string& data_path) {
    ctx.command = "pareto verify";
    ctx.inputs = {data_path};
    Dataset d = dataset_from_json(slurp(data_path));
    PhaseTimer t(ctx.timings, "verify");
    ParetoCheck chk =
        pareto_verify_extended(point_list(d, "A"), point_list(d, "B"), point_list(d, "C"));
    ctx.result = json{{"dominance", chk.dominance},
                      {"inclusion", chk.inclusion},
                      {"minimality", chk.minimality},
                      {"result", chk.all()}};
    ctx.exit_code = chk.all() ? 0 : 1;
}

void cmd_pareto_compute(RunContext& ctx, const std::string& data_path) {
    ctx.command = "pareto compute";
    ctx.inputs = {data_path};
    Dataset d = dataset_from_json(slurp(data_path));
    PhaseTimer t(ctx.timings, "compute");
    std::vector<Vec> front = pareto_compute(point_list(d, "A"), point_list(d, "B"));
    ctx.result = json{{"front", front}, {"size", front.size()}};
}

void cmd_hausdorff(RunContext& ctx, const std::string& data_path) {
    ctx.command = "hausdorff";
    ctx.inputs = {data_path};
    Dataset d = dataset_from_json(slurp(data_path));
    i64 gamma = free_scalar(d, "gamma");
    PhaseTimer t(ctx.timings, "decide");
    bool res = hausdorff_n_translations(point_list(d, "A"), point_list(d, "B"),
                                        point_list(d, "C"), gamma);
    ctx.result = json{{"gamma", gamma}, {"result", res}};
    ctx.exit_code = res ? 0 : 1;
}

void cmd_maxconv(RunContext& ctx, const std::string& data_path) {
    ctx.command = "maxconv";
    ctx.inputs = {data_path};
    Dataset d = dataset_from_json(slurp(data_path));
    PhaseTimer t(ctx.timings, "decide");
    bool res = maxconv_lb(scalar_list(d, "A"), scalar_list(d, "B"), scalar_list(d, "C"));
    ctx.result = json{{"result", res}};
    ctx.exit_code = res ? 0 : 1;
}

void cmd_sumset_approx(RunContext& ctx, const std::string& data_path) {
    ctx.command = "sumset-approx";
    ctx.inputs = {data_path};
    Dataset d = dataset_from_json(slurp(data_path));
    i64 t_slack = free_scalar(d, "t");
    PhaseTimer t(ctx.timings, "decide");
    bool res =
        sumset_approx(scalar_list(d, "A"), scalar_list(d, "B"), scalar_list(d, "C"), t_slack);
    ctx.result = json{{"result", res}, {"t", t_slack}};
    ctx.exit_code = res ? 0 : 1;
}

void cmd_gen(RunContext& ctx, const std::string& problem, std::size_t n, u64 seed,
             const std::string& out_formula, const std::string& out_data) {
    ctx.command = "gen";
    ctx.seed = seed;
    PhaseTimer t(ctx.timings, "generate");
    GeneratedProblem gp = generate_problem(problem, n, seed);
    std::string data_json = dataset_to_json(gp.data);
    ctx.result = json{{"data", json::parse(data_json)},
                      {"formula", gp.formula_text},
                      {"n", n},
                      {"problem", gp.problem},
                      {"seed", seed}};
    if (!out_data.empty()) spit(out_data, data_json + "\n");
    if (!out_formula.empty()) {
        if (gp.formula_text.empty())
            throw std::runtime_error("problem '" + gp.problem +
                                     "' is array-shaped and has no sentence form");
        spit(out_formula, gp.formula_text + "\n");
    }
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || n == 0)
            throw std::runtime_error("--sizes entries must be positive integers, got '" + tok +
                                     "'");
        out.push_back(n);
    }
    if (out.empty()) throw std::runtime_error("--sizes is empty");
    return out;
}

void cmd_bench(RunContext& ctx, const std::string& problem, const std::string& engine,
               const std::string& sizes_text, u64 seed, const std::string& csv_path) {
    ctx.command = "bench";
    ctx.engine = engine;
    ctx.seed = seed;
    auto eng = engine_from_name(engine);
    if (!eng) throw std::runtime_error("unknown engine '" + engine + "'");
    std::vector<std::size_t> sizes = parse_sizes(sizes_text);
    std::string csv = "n,engine,ms,result\n";
    for (std::size_t n : sizes) {
        // One fresh instance per size; the offset keeps seeds disjoint across
        // sizes while the whole sweep stays a function of --seed.
        GeneratedProblem gp = generate_problem(problem, n, seed + n);
        if (gp.formula_text.empty())
            throw std::runtime_error("bench needs a sentence-shaped problem, '" + gp.problem +
                                     "' is array-shaped");
        Formula f = parse_formula(gp.formula_text);
        auto start = std::chrono::steady_clock::now();
        bool res = decide_dispatch(f, gp.data, *eng);
        auto dt = std::chrono::steady_clock::now() - start;
        i64 ms = std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
        ctx.timings["n" + std::to_string(n)] = ms;
        csv += std::to_string(n) + "," + engine + "," + std::to_string(ms) + "," +
               (res ? "true" : "false") + "\n";
    }
    spit(csv_path, csv);
    ctx.result = json{{"csv", csv_path}, {"rows", sizes.size()}};
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact decision, counting and reduction for quantified linear sentences "
                 "over finite integer sets"};
    app.name("liaset");
    app.require_subcommand(1);

    RunContext ctx;
    std::string manifest_path;

    struct {
        std::string formula, data, engine = "auto";
    } dec;
    CLI::App* decide = app.add_subcommand("decide", "decide a sentence over a dataset");
    decide->add_option("--formula", dec.formula, "path to the sentence text")->required();
    decide->add_option("--data", dec.data, "path to the dataset JSON")->required();
    decide->add_option("--engine", dec.engine, "brute|baseline|reduction|ineqdim3|auto");
    decide->add_option("--manifest", manifest_path, "write a run manifest to this path");
    decide->callback([&] { cmd_decide(ctx, dec.formula, dec.data, dec.engine); });

    struct {
        std::string formula, data, engine = "reduction";
    } cnt;
    CLI::App* count = app.add_subcommand("count", "count witnesses of an existential sentence");
    count->add_option("--formula", cnt.formula, "path to the sentence text")->required();
    count->add_option("--data", cnt.data, "path to the dataset JSON")->required();
    count->add_option("--engine", cnt.engine, "brute|reduction");
    count->add_option("--manifest", manifest_path, "write a run manifest to this path");
    count->callback([&] { cmd_count(ctx, cnt.formula, cnt.data, cnt.engine); });

    struct {
        std::string formula, data, out;
        bool counting = false;
    } red;
    CLI::App* reduce =
        app.add_subcommand("reduce", "compile an existential sentence to exact-sum instances");
    reduce->add_option("--formula", red.formula, "path to the sentence text")->required();
    reduce->add_option("--data", red.data, "path to the dataset JSON")->required();
    reduce->add_option("--out", red.out, "directory for the instance files and manifest")
        ->required();
    reduce->add_flag("--count", red.counting, "compile the counting family (signed entries)");
    reduce->add_option("--manifest", manifest_path, "write a run manifest to this path");
    reduce->callback([&] { cmd_reduce(ctx, red.formula, red.data, red.out, red.counting); });

    struct {
        std::string solve_file, count_file;
    } ks;
    CLI::App* ksum_cmd = app.add_subcommand("ksum", "operate on exact-sum instance files");
    ksum_cmd->require_subcommand(1);
    CLI::App* ksum_solve = ksum_cmd->add_subcommand("solve", "decide one instance file");
    ksum_solve->add_option("file", ks.solve_file, "instance file")->required();
    ksum_solve->add_option("--manifest", manifest_path, "write a run manifest to this path");
    ksum_solve->callback([&] { cmd_ksum(ctx, false, ks.solve_file); });
    CLI::App* ksum_count = ksum_cmd->add_subcommand("count", "count witnesses of one instance");
    ksum_count->add_option("file", ks.count_file, "instance file")->required();
    ksum_count->add_option("--manifest", manifest_path, "write a run manifest to this path");
    ksum_count->callback([&] { cmd_ksum(ctx, true, ks.count_file); });

    struct {
        std::string file2d, file3d;
        bool verify2d = false, verify3d = false;
    } geo;
    CLI::App* geom = app.add_subcommand("geom", "disjoint decompositions of rectilinear shapes");
    geom->require_subcommand(1);
    CLI::App* g2 = geom->add_subcommand("decompose2d", "partition a union of rectangles");
    g2->add_option("file", geo.file2d, "JSON list of [x1,x2,y1,y2] rectangles")->required();
    g2->add_flag("--verify", geo.verify2d, "check the partition on an arrangement sample grid");
    g2->add_option("--manifest", manifest_path, "write a run manifest to this path");
    g2->callback([&] { cmd_geom2d(ctx, geo.file2d, geo.verify2d); });
    CLI::App* g3 = geom->add_subcommand("decompose3d", "partition a union of congruent cubes");
    g3->add_option("file", geo.file3d, "JSON {side, corners} cube set")->required();
    g3->add_flag("--verify", geo.verify3d,
                 "check volume and membership against the full grid (cubic cost)");
    g3->add_option("--manifest", manifest_path, "write a run manifest to this path");
    g3->callback([&] { cmd_geom3d(ctx, geo.file3d, geo.verify3d); });

    struct {
        std::string verify_data, compute_data;
    } par;
    CLI::App* pareto = app.add_subcommand("pareto", "pareto sums of two point sets");
    pareto->require_subcommand(1);
    CLI::App* pv = pareto->add_subcommand(
        "verify", "check C against the pareto front of A+B (sets A, B, C)");
    pv->add_option("data", par.verify_data, "dataset JSON with sets A, B, C")->required();
    pv->add_option("--manifest", manifest_path, "write a run manifest to this path");
    pv->callback([&] { cmd_pareto_verify(ctx, par.verify_data); });
    CLI::App* pc = pareto->add_subcommand("compute", "compute the pareto front of A+B");
    pc->add_option("data", par.compute_data, "dataset JSON with sets A, B")->required();
    pc->add_option("--manifest", manifest_path, "write a run manifest to this path");
    pc->callback([&] { cmd_pareto_compute(ctx, par.compute_data); });

    std::string haus_data;
    CLI::App* haus = app.add_subcommand(
        "hausdorff", "does some a in A translate B to within distance gamma of C");
    haus->add_option("data", haus_data, "dataset JSON with sets A, B, C and free gamma")
        ->required();
    haus->add_option("--manifest", manifest_path, "write a run manifest to this path");
    haus->callback([&] { cmd_hausdorff(ctx, haus_data); });

    std::string mc_data;
    CLI::App* mc = app.add_subcommand(
        "maxconv", "is C a pointwise lower bound on the max-plus convolution of A and B");
    mc->add_option("data", mc_data, "dataset JSON with equal-length 1D sets A, B, C")->required();
    mc->add_option("--manifest", manifest_path, "write a run manifest to this path");
    mc->callback([&] { cmd_maxconv(ctx, mc_data); });

    std::string sa_data;
    CLI::App* sa = app.add_subcommand("sumset-approx", "is A+B covered by C+{0..t}");
    sa->add_option("data", sa_data, "dataset JSON with 1D sets A, B, C and free t")->required();
    sa->add_option("--manifest", manifest_path, "write a run manifest to this path");
    sa->callback([&] { cmd_sumset_approx(ctx, sa_data); });

    struct {
        std::string problem, out_formula, out_data;
        std::size_t n = 16;
        u64 seed = 1;
    } gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a named problem instance");
    gen_cmd->add_option("problem", gen.problem, "one of the named generators")->required();
    gen_cmd->add_option("--n", gen.n, "instance size");
    gen_cmd->add_option("--seed", gen.seed, "generator seed");
    gen_cmd->add_option("--out-formula", gen.out_formula, "also write the sentence here");
    gen_cmd->add_option("--out-data", gen.out_data, "also write the dataset JSON here");
    gen_cmd->add_option("--manifest", manifest_path, "write a run manifest to this path");
    gen_cmd->callback(
        [&] { cmd_gen(ctx, gen.problem, gen.n, gen.seed, gen.out_formula, gen.out_data); });

    struct {
        std::string problem = "threesum", engine = "auto", sizes, csv;
        u64 seed = 1;
    } bch;
    CLI::App* bench = app.add_subcommand("bench", "time decisions across instance sizes");
    bench->add_option("--problem", bch.problem, "sentence-shaped generator name");
    bench->add_option("--engine", bch.engine, "brute|baseline|reduction|ineqdim3|auto");
    bench->add_option("--sizes", bch.sizes, "comma-separated instance sizes")->required();
    bench->add_option("--csv", bch.csv, "output CSV path (n,engine,ms,result)")->required();
    bench->add_option("--seed", bch.seed, "generator seed");
    bench->add_option("--manifest", manifest_path, "write a run manifest to this path");
    bench->callback([&] { cmd_bench(ctx, bch.problem, bch.engine, bch.sizes, bch.seed, bch.csv); });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
        out << ctx.result.dump() << '\n';
        if (!manifest_path.empty()) spit(manifest_path, run_manifest(ctx).dump() + "\n");
        return ctx.exit_code;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace liaset
