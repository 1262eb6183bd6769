#pragma once

#include <string>
#include <vector>

#include "liaset/dataset.hpp"

namespace liaset {

// Seeded instance generators for the command line. Every generator emits a
// dataset that loads back through dataset_from_json; formula problems also
// carry the sentence deciding them. Problems whose command takes bare arrays
// (pareto, hausdorff, maxconv, sumset) reuse the dataset container: point
// lists under the conventional set names, scalars like the hausdorff bound
// under `free`.
struct GeneratedProblem {
    std::string problem;
    std::string formula_text;  // empty for the array-shaped problems
    Dataset data;
};

std::vector<std::string> generator_names();

// Throws std::invalid_argument for unknown names. About half of the seeds
// plant a witness (or build a satisfied instance), the rest stay random, so
// both outcomes show up in benchmarks.
GeneratedProblem generate_problem(const std::string& problem, std::size_t n, u64 seed);

}  // namespace liaset
