#include <doctest.h>

#include <unistd.h>

#include <json.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "liaset/baseline.hpp"
#include "liaset/cli.hpp"
#include "liaset/dataset.hpp"
#include "liaset/formula.hpp"
#include "liaset/gen.hpp"
#include "liaset/pipelines.hpp"
#include "testutil.hpp"

using namespace liaset;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
    json body() const { return json::parse(out); }
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    CliResult r;
    r.code = run_cli(std::move(args), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// Scratch directory per test case, removed on scope exit.
struct TempDir {
    fs::path path;
    TempDir() {
        static std::atomic<int> counter{0};
        path = fs::temp_directory_path() / ("liaset_cli_" + std::to_string(::getpid()) + "_" +
                                            std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name, const std::string& text) const {
        fs::path p = path / name;
        std::ofstream(p, std::ios::binary) << text;
        return p.string();
    }
    std::string read(const std::string& name) const {
        std::ifstream in(path / name, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
};

// Writes one random sentence to disk and remembers the reference answer.
struct DiskSentence {
    std::string formula_path;
    std::string data_path;
    bool expected = false;
};

DiskSentence to_disk(const TempDir& dir, const testutil::RandomSentence& s, int tag) {
    DiskSentence out;
    out.formula_path = dir.file("f" + std::to_string(tag) + ".txt", s.text);
    out.data_path = dir.file("d" + std::to_string(tag) + ".json", dataset_to_json(s.dataset));
    out.expected = testutil::ref_decide(s.formula, s.dataset);
    return out;
}

json manifest_without_timings(std::string text) {
    json m = json::parse(text);
    m.erase("timings_ms");
    return m;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("generators emit loadable deterministic datasets") {
    for (const std::string& name : generator_names()) {
        CAPTURE(name);
        GeneratedProblem first = generate_problem(name, 8, 5);
        GeneratedProblem again = generate_problem(name, 8, 5);
        CHECK(first.problem == name);
        CHECK(dataset_to_json(first.data) == dataset_to_json(again.data));
        CHECK(first.formula_text == again.formula_text);

        Dataset reloaded = dataset_from_json(dataset_to_json(first.data));
        CHECK(dataset_to_json(reloaded) == dataset_to_json(first.data));

        if (!first.formula_text.empty()) {
            Formula f = parse_formula(first.formula_text);
            Instance inst = bind(f, first.data);
            CHECK(inst.k() >= 3);
        }
    }
    CHECK_THROWS_AS(generate_problem("warp", 4, 1), std::invalid_argument);
}

TEST_CASE("generators reach both outcomes across seeds") {
    auto outcomes = [](const std::string& name, auto&& decide) {
        int yes = 0, runs = 30;
        for (int seed = 1; seed <= runs; ++seed)
            yes += decide(generate_problem(name, 10, u64(seed))) ? 1 : 0;
        CAPTURE(name);
        CHECK(yes > 0);
        CHECK(yes < runs);
    };

    auto by_formula = [](const GeneratedProblem& gp) {
        return decide_dispatch(parse_formula(gp.formula_text), gp.data);
    };
    outcomes("threesum", by_formula);
    outcomes("ksum", by_formula);
    outcomes("avgfree3", by_formula);
    outcomes("conv3sum", by_formula);
    outcomes("triangle", by_formula);

    auto points = [](const GeneratedProblem& gp, const char* s) { return gp.data.sets.at(s); };
    auto scalars = [&](const GeneratedProblem& gp, const char* s) {
        std::vector<i64> out;
        for (const Vec& v : points(gp, s)) out.push_back(v.at(0));
        return out;
    };
    outcomes("pareto", [&](const GeneratedProblem& gp) {
        return pareto_verify_extended(points(gp, "A"), points(gp, "B"), points(gp, "C")).all();
    });
    outcomes("hausdorff", [&](const GeneratedProblem& gp) {
        return hausdorff_n_translations(points(gp, "A"), points(gp, "B"), points(gp, "C"),
                                        gp.data.free.at("gamma"));
    });
    outcomes("maxconv", [&](const GeneratedProblem& gp) {
        return maxconv_lb(scalars(gp, "A"), scalars(gp, "B"), scalars(gp, "C"));
    });
    outcomes("sumset", [&](const GeneratedProblem& gp) {
        return sumset_approx(scalars(gp, "A"), scalars(gp, "B"), scalars(gp, "C"),
                             gp.data.free.at("t"));
    });
}

TEST_CASE("decide answers from files with exit codes") {
    TempDir dir;
    auto g = testutil::rng(0xC11D);
    testutil::SentenceOptions opt;
    int seen_true = 0, seen_false = 0;
    for (int round = 0; round < 12; ++round) {
        DiskSentence s = to_disk(dir, testutil::rnd_sentence(g, round % 2 ? "EEE" : "AE", opt),
                                 round);
        CliResult r = cli({"decide", "--formula", s.formula_path, "--data", s.data_path});
        CAPTURE(round);
        CHECK(r.code == (s.expected ? 0 : 1));
        CHECK(r.body()["result"] == s.expected);
        CHECK(r.body()["engine"] == "auto");
        CHECK(!r.body()["notes"].empty());
        (s.expected ? seen_true : seen_false)++;

        CliResult br = cli({"decide", "--formula", s.formula_path, "--data", s.data_path,
                            "--engine", "brute"});
        CHECK(br.body()["result"] == s.expected);
    }
    CHECK(seen_true > 0);
    CHECK(seen_false > 0);
}

TEST_CASE("count agrees across engines and rejects universal prefixes") {
    TempDir dir;
    auto g = testutil::rng(0xC0A7);
    testutil::SentenceOptions opt;
    for (int round = 0; round < 8; ++round) {
        DiskSentence s = to_disk(dir, testutil::rnd_sentence(g, "EEE", opt), round);
        CliResult fast = cli({"count", "--formula", s.formula_path, "--data", s.data_path});
        CliResult slow = cli({"count", "--formula", s.formula_path, "--data", s.data_path,
                              "--engine", "brute"});
        CAPTURE(round);
        CHECK(fast.code == 0);
        CHECK(fast.body()["count"] == slow.body()["count"]);
    }

    DiskSentence forall = to_disk(dir, testutil::rnd_sentence(g, "AE", testutil::SentenceOptions{}),
                                  99);
    CliResult r = cli({"count", "--formula", forall.formula_path, "--data", forall.data_path});
    CHECK(r.code == 2);
    CHECK(r.err.find("existential") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("reduce emits instance files that replay the decision") {
    TempDir dir;
    auto g = testutil::rng(0x2ED0);
    testutil::SentenceOptions opt;
    for (int round = 0; round < 10; ++round) {
        DiskSentence s = to_disk(dir, testutil::rnd_sentence(g, "EEE", opt), round);
        std::string fam = (dir.path / ("fam" + std::to_string(round))).string();
        CliResult red = cli({"reduce", "--formula", s.formula_path, "--data", s.data_path,
                             "--out", fam});
        CAPTURE(round);
        REQUIRE(red.code == 0);

        bool replayed = red.body()["trivially_true"].get<bool>();
        std::size_t entries = red.body()["entries"].get<std::size_t>();
        for (std::size_t i = 0; i < entries && !replayed; ++i) {
            CliResult sol = cli({"ksum", "solve", fam + "/instance_" + std::to_string(i) + ".txt"});
            REQUIRE(sol.code != 2);
            replayed = sol.code == 0;
        }
        CHECK(replayed == s.expected);
    }
}

TEST_CASE("reduce reruns byte-identically and counting families replay counts") {
    TempDir dir;
    auto g = testutil::rng(0x2ED1);
    testutil::SentenceOptions opt;
    for (int round = 0; round < 5; ++round) {
        DiskSentence s = to_disk(dir, testutil::rnd_sentence(g, "EEE", opt), round);
        std::string fam1 = (dir.path / ("a" + std::to_string(round))).string();
        std::string fam2 = (dir.path / ("b" + std::to_string(round))).string();
        CliResult first = cli({"reduce", "--formula", s.formula_path, "--data", s.data_path,
                               "--out", fam1, "--count"});
        CliResult second = cli({"reduce", "--formula", s.formula_path, "--data", s.data_path,
                                "--out", fam2, "--count"});
        CAPTURE(round);
        REQUIRE(first.code == 0);
        json body1 = first.body(), body2 = second.body();
        body1.erase("out");
        body2.erase("out");
        CHECK(body1 == body2);

        json manifest = manifest_without_timings(dir.read("a" + std::to_string(round) +
                                                           "/manifest.json"));
        json manifest2 = manifest_without_timings(dir.read("b" + std::to_string(round) +
                                                            "/manifest.json"));
        manifest["result"].erase("out");
        manifest2["result"].erase("out");
        CHECK(manifest == manifest2);

        // Signed per-instance counts reassemble the witness count.
        i64 total = 0;
        for (const json& entry : manifest["entries"]) {
            std::string file = fam1 + "/" + entry["file"].get<std::string>();
            CHECK(dir.read("a" + std::to_string(round) + "/" + entry["file"].get<std::string>()) ==
                  dir.read("b" + std::to_string(round) + "/" + entry["file"].get<std::string>()));
            CliResult counted = cli({"ksum", "count", file});
            REQUIRE(counted.code == 0);
            total += entry["sign"].get<i64>() * counted.body()["count"].get<i64>();
        }
        CliResult brute = cli({"count", "--formula", s.formula_path, "--data", s.data_path,
                               "--engine", "brute"});
        CHECK(total == brute.body()["count"].get<i64>());
    }
}

TEST_CASE("geometry commands decompose and self-verify") {
    TempDir dir;
    std::string rects = dir.file("rects.json", "[[0,2,0,2],[1,3,1,3]]");
    CliResult r2 = cli({"geom", "decompose2d", rects, "--verify"});
    CHECK(r2.code == 0);
    CHECK(r2.body()["verified"] == true);
    CHECK(r2.body()["count"].get<int>() > 1);

    std::string bad = dir.file("bad.json", "[[0,0,0,2]]");
    CHECK(cli({"geom", "decompose2d", bad}).code == 2);

    std::string cubes = dir.file("cubes.json", R"({"side":2,"corners":[[0,0,0],[1,1,1]]})");
    CliResult r3 = cli({"geom", "decompose3d", cubes, "--verify"});
    CHECK(r3.code == 0);
    CHECK(r3.body()["verified"] == true);
    CHECK(r3.body()["volume"] == 15);  // two side-2 cubes sharing a unit cube
}

TEST_CASE("array commands answer from dataset files") {
    TempDir dir;
    std::string good = dir.file("pareto.json",
                                R"({"sets":{"A":[[0,1],[2,0]],"B":[[0,0]],"C":[[0,1],[2,0]]}})");
    CHECK(cli({"pareto", "verify", good}).code == 0);
    std::string broken = dir.file("pareto_broken.json",
                                  R"({"sets":{"A":[[0,1],[2,0]],"B":[[0,0]],"C":[[0,1]]}})");
    CliResult pv = cli({"pareto", "verify", broken});
    CHECK(pv.code == 1);
    CHECK(pv.body()["inclusion"] == true);
    CHECK(pv.body()["dominance"] == false);

    CliResult pc = cli({"pareto", "compute", good});
    CHECK(pc.code == 0);
    CHECK(pc.body()["front"] == json::parse("[[0,1],[2,0]]"));

    std::string haus = dir.file("haus.json",
                                R"({"sets":{"A":[[1,1]],"B":[[2,2],[4,4]],"C":[[1,1],[3,3]]},)"
                                R"("free":{"gamma":0}})");
    CHECK(cli({"hausdorff", haus}).code == 0);
    std::string haus_far = dir.file("haus_far.json",
                                    R"({"sets":{"A":[[1,1]],"B":[[0,0],[9,9]],"C":[[1,1]]},)"
                                    R"("free":{"gamma":1}})");
    CHECK(cli({"hausdorff", haus_far}).code == 1);
    std::string no_gamma = dir.file("haus_bad.json", R"({"sets":{"A":[[1,1]],"B":[],"C":[]}})");
    CHECK(cli({"hausdorff", no_gamma}).code == 2);

    std::string conv_ok = dir.file("conv_ok.json",
                                   R"({"sets":{"A":[[0],[1]],"B":[[0],[2]],"C":[[0],[2]]}})");
    CHECK(cli({"maxconv", conv_ok}).code == 0);
    std::string conv_high = dir.file("conv_high.json",
                                     R"({"sets":{"A":[[0],[1]],"B":[[0],[2]],"C":[[0],[3]]}})");
    CHECK(cli({"maxconv", conv_high}).code == 1);

    std::string ss = dir.file("ss.json",
                              R"({"sets":{"A":[[0],[1]],"B":[[0],[1]],"C":[[0]]},"free":{"t":2}})");
    CHECK(cli({"sumset-approx", ss}).code == 0);
    std::string ss_gap = dir.file("ss_gap.json",
                                  R"({"sets":{"A":[[0],[5]],"B":[[0]],"C":[[0]]},"free":{"t":2}})");
    CHECK(cli({"sumset-approx", ss_gap}).code == 1);
}

TEST_CASE("gen command writes sentence and dataset files") {
    TempDir dir;
    std::string f = (dir.path / "f.txt").string();
    std::string d = (dir.path / "d.json").string();
    CliResult r = cli({"gen", "threesum", "--n", "6", "--seed", "9", "--out-formula", f,
                       "--out-data", d});
    REQUIRE(r.code == 0);
    CHECK(r.body()["problem"] == "threesum");
    CHECK(r.body()["n"] == 6);
    CHECK(r.body()["seed"] == 9);

    GeneratedProblem gp = generate_problem("threesum", 6, 9);
    CHECK(dir.read("f.txt") == gp.formula_text + "\n");
    CHECK(dir.read("d.json") == dataset_to_json(gp.data) + "\n");
    CHECK(cli({"decide", "--formula", f, "--data", d}).code != 2);

    // Array-shaped problems have no sentence to write.
    CHECK(cli({"gen", "pareto", "--n", "4", "--seed", "1", "--out-formula", f}).code == 2);
    CHECK(cli({"gen", "pareto", "--n", "4", "--seed", "1"}).code == 0);
}

TEST_CASE("bench writes one csv row per size") {
    TempDir dir;
    std::string csv = (dir.path / "bench.csv").string();
    CliResult r = cli({"bench", "--sizes", "4,8", "--csv", csv});
    REQUIRE(r.code == 0);
    CHECK(r.body()["rows"] == 2);

    std::istringstream table(dir.read("bench.csv"));
    std::string line;
    std::getline(table, line);
    CHECK(line == "n,engine,ms,result");
    std::getline(table, line);
    CHECK(line.rfind("4,auto,", 0) == 0);
    std::getline(table, line);
    CHECK(line.rfind("8,auto,", 0) == 0);
    CHECK(!std::getline(table, line));

    CHECK(cli({"bench", "--sizes", "4,x", "--csv", csv}).code == 2);
    CHECK(cli({"bench", "--sizes", "4", "--csv", csv, "--problem", "pareto"}).code == 2);
}

TEST_CASE("manifests capture the run and stay deterministic") {
    TempDir dir;
    auto g = testutil::rng(0x3A9F);
    DiskSentence s = to_disk(dir, testutil::rnd_sentence(g, "EEE", testutil::SentenceOptions{}), 0);
    std::string m1 = (dir.path / "m1.json").string();
    std::string m2 = (dir.path / "m2.json").string();
    CliResult r1 = cli({"decide", "--formula", s.formula_path, "--data", s.data_path,
                        "--manifest", m1});
    cli({"decide", "--formula", s.formula_path, "--data", s.data_path, "--manifest", m2});

    json m = json::parse(dir.read("m1.json"));
    CHECK(m["command"] == "decide");
    CHECK(m["engine"] == "auto");
    CHECK(m["inputs"] == json::parse(R"([")" + s.formula_path + R"(",")" + s.data_path + R"("])"));
    CHECK(m["seed"] == 0);
    CHECK(m.contains("timings_ms"));
    CHECK(m["result"] == r1.body());
    CHECK(manifest_without_timings(dir.read("m1.json")) ==
          manifest_without_timings(dir.read("m2.json")));
}

TEST_CASE("errors exit with code two and a diagnostic") {
    TempDir dir;
    CHECK(cli({"warp"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"decide", "--formula", "missing.txt"}).code == 2);
    CHECK(cli({"decide", "--formula", (dir.path / "nope.txt").string(), "--data",
               (dir.path / "nope.json").string()}).code == 2);
    CHECK(cli({"gen", "warp"}).code == 2);
    CHECK(cli({"ksum", "solve", dir.file("junk.txt", "not an instance")}).code == 2);

    std::string f = dir.file("f.txt", "exists x in A exists y in A exists z in A : "
                                      "x[1] + y[1] + z[1] = 0");
    std::string d = dir.file("d.json", R"({"sets":{"A":[[0],[1]]}})");
    CliResult r = cli({"decide", "--formula", f, "--data", d, "--engine", "ineqdim3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("applicable engines") != std::string::npos);
    CHECK(cli({"decide", "--formula", f, "--data", d, "--engine", "warp"}).code == 2);

    CliResult help = cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("decide") != std::string::npos);
}

}  // TEST_SUITE
