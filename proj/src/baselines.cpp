#include "mega/baselines.hpp"

#include <algorithm>
#include <chrono>

#include "mega/errors.hpp"

namespace mega {

RunResult run_random_search(const Scenario& s, long long budget, std::uint64_t seed, int block) {
  if (budget < 1) throw InvalidArgument("random search budget must be >= 1");
  if (block < 1) throw InvalidArgument("random search block must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  const Objective objective = entropy_objective();

  Rng rng(seed);
  RunResult out;
  out.trace.objective = objective.name;

  double block_sum = 0.0;
  long long in_block = 0;
  for (long long k = 0; k < budget; ++k) {
    Individual ind = make_individual(s, random_placement(s, rng), objective);
    block_sum += ind.score;
    if (k == 0 || ind.score > out.best.score) out.best = std::move(ind);
    ++in_block;
    if (in_block == block || k + 1 == budget) {
      GenerationStats g;
      g.generation = static_cast<int>(out.trace.generations.size()) + 1;
      g.best_fitness = out.best.score;
      g.mean_fitness = block_sum / static_cast<double>(in_block);
      g.psi = out.best.report.psi;
      g.phi = out.best.report.phi;
      out.trace.generations.push_back(g);
      block_sum = 0.0;
      in_block = 0;
    }
  }
  out.trace.evaluations = budget;
  out.trace.termination = Termination::iterations_exhausted;
  out.trace.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

Objective classic_objective() {
  return {"classic", [](const Scenario& s, const FitnessReport& r) {
            const double n = s.client_count();
            const double m = s.router_count();
            return 0.5 * (r.psi / n + r.phi / (n + m));
          }};
}

RunResult run_classic_ga(const Scenario& s, const GaConfig& cfg) {
  return run_ga(s, cfg, classic_objective());
}

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::mega:
      return "mega";
    case Algorithm::random_search:
      return "random_search";
    case Algorithm::classic_ga:
      return "classic_ga";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "mega") return Algorithm::mega;
  if (name == "random_search") return Algorithm::random_search;
  if (name == "classic_ga") return Algorithm::classic_ga;
  return std::nullopt;
}

long long ga_evaluation_budget(const GaConfig& cfg) {
  return static_cast<long long>(cfg.population_size) +
         static_cast<long long>(cfg.max_iterations) * (cfg.population_size - cfg.elitism_count);
}

RunResult run_algorithm(Algorithm a, const Scenario& s, const GaConfig& cfg) {
  switch (a) {
    case Algorithm::mega:
      return run_mega(s, cfg);
    case Algorithm::random_search:
      cfg.validate();
      return run_random_search(s, ga_evaluation_budget(cfg), cfg.seed, cfg.population_size);
    case Algorithm::classic_ga:
      return run_classic_ga(s, cfg);
  }
  throw InvalidArgument("unknown algorithm");
}

}  // namespace mega
