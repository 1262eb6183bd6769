#include "liaset/gen.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

#include "liaset/pipelines.hpp"

namespace liaset {

namespace {

i64 rnd(std::mt19937_64& g, i64 lo, i64 hi) {
    return std::uniform_int_distribution<i64>{lo, hi}(g);
}

std::vector<Vec> rnd_points(std::mt19937_64& g, std::size_t n, std::size_t dim, i64 bound) {
    std::vector<Vec> out(n);
    for (Vec& p : out) {
        p.resize(dim);
        for (i64& x : p) x = rnd(g, -bound, bound);
    }
    return out;
}

std::vector<Vec> scalars(const std::vector<i64>& xs) {
    std::vector<Vec> out;
    out.reserve(xs.size());
    for (i64 x : xs) out.push_back(Vec{x});
    return out;
}

std::vector<i64> rnd_scalars(std::mt19937_64& g, std::size_t n, i64 bound) {
    std::vector<i64> out(n);
    for (i64& x : out) x = rnd(g, -bound, bound);
    return out;
}

GeneratedProblem gen_threesum(std::mt19937_64& g, std::size_t n) {
    // Span ~2n^3 keeps the n^3 unplanted triples near half a hit on average.
    const i64 bound = i64(n) * i64(n) * i64(n) + 2;
    auto a = rnd_scalars(g, n, bound), b = rnd_scalars(g, n, bound), c = rnd_scalars(g, n, bound);
    if (n > 0 && rnd(g, 0, 1)) {
        // Plant one zero-sum triple at random slots.
        std::size_t i = std::size_t(rnd(g, 0, i64(n) - 1));
        std::size_t j = std::size_t(rnd(g, 0, i64(n) - 1));
        std::size_t k = std::size_t(rnd(g, 0, i64(n) - 1));
        c[k] = -(a[i] + b[j]);
    }
    GeneratedProblem out;
    out.problem = "threesum";
    out.formula_text = "exists x in A exists y in B exists z in C : x[1] + y[1] + z[1] = 0";
    out.data.sets = {{"A", scalars(a)}, {"B", scalars(b)}, {"C", scalars(c)}};
    return out;
}

GeneratedProblem gen_ksum(std::mt19937_64& g, std::size_t n) {
    const std::size_t k = 4;
    const i64 bound = i64(n) * i64(n) * i64(n) * i64(n) + 2;  // ~half a hit unplanted
    GeneratedProblem out;
    out.problem = "ksum";
    std::string prefix, sum;
    std::vector<std::vector<i64>> lists;
    for (std::size_t i = 0; i < k; ++i) {
        lists.push_back(rnd_scalars(g, n, bound));
        std::string var = "x" + std::to_string(i + 1), set = "S" + std::to_string(i + 1);
        prefix += "exists " + var + " in " + set + " ";
        sum += (i ? " + " : "") + var + "[1]";
    }
    if (n > 0 && rnd(g, 0, 1)) {
        i64 partial = 0;
        for (std::size_t i = 0; i + 1 < k; ++i)
            partial += lists[i][std::size_t(rnd(g, 0, i64(n) - 1))];
        lists[k - 1][std::size_t(rnd(g, 0, i64(n) - 1))] = -partial;
    }
    out.formula_text = prefix + ": " + sum + " = 0";
    for (std::size_t i = 0; i < k; ++i)
        out.data.sets.emplace("S" + std::to_string(i + 1), scalars(lists[i]));
    return out;
}

GeneratedProblem gen_avgfree(std::mt19937_64& g, std::size_t n) {
    std::vector<i64> a(n);
    for (i64& x : a) x = rnd(g, 0, 4 * i64(n) * i64(n));
    if (n >= 3 && rnd(g, 0, 1)) {
        i64 start = rnd(g, 0, i64(n)), step = rnd(g, 1, i64(n) + 1);
        a[0] = start;
        a[1] = start + step;
        a[2] = start + 2 * step;
    }
    GeneratedProblem out;
    out.problem = "avgfree3";
    out.formula_text =
        "exists x in A exists y in A exists z in A : "
        "x[1] < y[1] and y[1] < z[1] and x[1] + z[1] = 2*y[1]";
    out.data.sets = {{"A", scalars(a)}};
    return out;
}

GeneratedProblem gen_conv3sum(std::mt19937_64& g, std::size_t n) {
    std::vector<i64> x = rnd_scalars(g, n, 2 * i64(n) * i64(n));
    if (n >= 2 && rnd(g, 0, 1)) {
        std::size_t i = std::size_t(rnd(g, 0, i64(n) - 1));
        std::size_t j = std::size_t(rnd(g, 0, i64(n) - 1 - i64(i)));
        x[i + j] = x[i] + x[j];
    }
    Encoding e = encode_conv_threesum(x);
    GeneratedProblem out;
    out.problem = "conv3sum";
    out.formula_text =
        "exists u in P exists v in P exists w in P : "
        "u[1] + v[1] = w[1] and u[2] + v[2] = w[2]";
    out.data = e.data;
    return out;
}

GeneratedProblem gen_triangle(std::mt19937_64& g, std::size_t n) {
    const i64 nodes = std::max<i64>(3, i64(n) / 2);
    std::set<std::pair<i64, i64>> picked;
    while (picked.size() < n) {
        i64 u = rnd(g, 0, nodes - 1), v = rnd(g, 0, nodes - 1);
        if (u != v) picked.insert({u, v});
        if (i64(picked.size()) >= nodes * (nodes - 1)) break;  // graph is full
    }
    std::vector<std::pair<i64, i64>> edges(picked.begin(), picked.end());
    if (rnd(g, 0, 1)) {
        edges.emplace_back(0, 1);
        edges.emplace_back(1, 2);
        edges.emplace_back(2, 0);
    }
    Encoding e = encode_triangle(edges);
    GeneratedProblem out;
    out.problem = "triangle";
    out.formula_text =
        "exists e1 in E exists e2 in E exists e3 in E : "
        "e1[3] = e2[2] and e2[3] = e3[2] and e3[3] = e1[2]";
    out.data = e.data;
    return out;
}

GeneratedProblem gen_pareto(std::mt19937_64& g, std::size_t n) {
    auto a = rnd_points(g, n, 2, i64(n) + 1);
    auto b = rnd_points(g, n, 2, i64(n) + 1);
    std::vector<Vec> c;
    if (!a.empty() && !b.empty()) c = pareto_compute(a, b);
    if (c.size() > 1 && rnd(g, 0, 1))
        c.erase(c.begin() + rnd(g, 0, i64(c.size()) - 1));  // break dominance
    GeneratedProblem out;
    out.problem = "pareto";
    out.data.sets = {{"A", a}, {"B", b}, {"C", c}};
    return out;
}

GeneratedProblem gen_hausdorff(std::mt19937_64& g, std::size_t n) {
    auto a = rnd_points(g, n, 2, i64(n) + 1);
    auto b = rnd_points(g, n, 2, i64(n) + 1);
    std::vector<Vec> c;
    if (!a.empty() && rnd(g, 0, 1)) {
        // C = B pulled back by a member of A, so that translation fits exactly.
        const Vec& shift = a[std::size_t(rnd(g, 0, i64(a.size()) - 1))];
        for (const Vec& p : b) c.push_back(Vec{p[0] - shift[0], p[1] - shift[1]});
    } else {
        c = rnd_points(g, n, 2, i64(n) + 1);
    }
    GeneratedProblem out;
    out.problem = "hausdorff";
    out.data.sets = {{"A", a}, {"B", b}, {"C", c}};
    out.data.free["gamma"] = rnd(g, 0, i64(n) + 1);
    return out;
}

GeneratedProblem gen_maxconv(std::mt19937_64& g, std::size_t n) {
    auto a = rnd_scalars(g, n, i64(n) + 1), b = rnd_scalars(g, n, i64(n) + 1);
    std::vector<i64> c(n);
    if (rnd(g, 0, 1)) {
        for (std::size_t k = 0; k < n; ++k) {
            i64 best = std::numeric_limits<i64>::min();
            for (std::size_t i = 0; i <= k; ++i) best = std::max(best, a[i] + b[k - i]);
            c[k] = best;  // tight instance, bound holds with equality
        }
    } else {
        c = rnd_scalars(g, n, 2 * i64(n) + 2);
    }
    GeneratedProblem out;
    out.problem = "maxconv";
    out.data.sets = {{"A", scalars(a)}, {"B", scalars(b)}, {"C", scalars(c)}};
    return out;
}

GeneratedProblem gen_sumset(std::mt19937_64& g, std::size_t n) {
    auto a = rnd_scalars(g, n, i64(n) + 1), b = rnd_scalars(g, n, i64(n) + 1);
    i64 t = rnd(g, 0, i64(n) + 1);
    std::vector<i64> c;
    if (rnd(g, 0, 1)) {
        std::set<i64> sums;  // exact cover, instance holds for any slack
        for (i64 x : a)
            for (i64 y : b) sums.insert(x + y);
        c.assign(sums.begin(), sums.end());
    } else {
        c = rnd_scalars(g, n, 2 * i64(n) + 2);
    }
    GeneratedProblem out;
    out.problem = "sumset";
    out.data.sets = {{"A", scalars(a)}, {"B", scalars(b)}, {"C", scalars(c)}};
    out.data.free["t"] = t;
    return out;
}

}  // namespace

std::vector<std::string> generator_names() {
    return {"threesum", "ksum",   "avgfree3", "conv3sum", "triangle",
            "pareto",   "hausdorff", "maxconv",  "sumset"};
}

GeneratedProblem generate_problem(const std::string& problem, std::size_t n, u64 seed) {
    std::mt19937_64 g(seed);
    if (problem == "threesum") return gen_threesum(g, n);
    if (problem == "ksum") return gen_ksum(g, n);
    if (problem == "avgfree3") return gen_avgfree(g, n);
    if (problem == "conv3sum") return gen_conv3sum(g, n);
    if (problem == "triangle") return gen_triangle(g, n);
    if (problem == "pareto") return gen_pareto(g, n);
    if (problem == "hausdorff") return gen_hausdorff(g, n);
    if (problem == "maxconv") return gen_maxconv(g, n);
    if (problem == "sumset") return gen_sumset(g, n);
    std::string names;
    for (const std::string& s : generator_names()) names += " " + s;
    throw std::invalid_argument("unknown problem '" + problem + "'; known:" + names);
}

}  // namespace liaset
