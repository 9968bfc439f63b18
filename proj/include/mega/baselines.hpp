#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "mega/ga.hpp"

namespace mega {

enum class BaselineKind { random_search, classic_ga };

/// Samples `budget` independent uniform placements and keeps the best by
/// entropy fitness. The trace has one row per block of `block` samples.
RunResult run_random_search(const Scenario& s, long long budget, std::uint64_t seed,
                            int block = 50);

/// (Psi / n + Phi / (n + m)) / 2, a coverage/connectivity comparator on [0, 1].
Objective classic_objective();

/// Same GA machinery as run_mega with the classic objective.
RunResult run_classic_ga(const Scenario& s, const GaConfig& cfg);

/// Algorithms the benchmark can run.
enum class Algorithm { mega, random_search, classic_ga };

const char* to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// Evaluations used by run_mega with this config if it never stops early.
long long ga_evaluation_budget(const GaConfig& cfg);

/// Dispatches to the algorithm. Random search uses ga_evaluation_budget(cfg).
RunResult run_algorithm(Algorithm a, const Scenario& s, const GaConfig& cfg);

}  // namespace mega
