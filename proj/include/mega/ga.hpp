#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <string>
#include <utility>
#include <vector>

#include "mega/entropy.hpp"
#include "mega/rng.hpp"

namespace mega {

enum class MutationKind {
  resample,  // redraw the router uniformly over the area
  gaussian,  // jitter by N(0, sigma), clamped to the area
  anchored,  // redraw uniformly within link range (2*CR) of another router
};

const char* to_string(MutationKind k);
std::optional<MutationKind> parse_mutation_kind(std::string_view name);

struct GaConfig {
  int population_size = 50;
  int max_iterations = 1000;
  double parent_fraction = 0.20;
  double base_mutation_rate = 0.10;
  double min_mutation_rate = 0.01;
  int elitism_count = 1;
  double target_fitness = 1.0;
  std::uint64_t seed = 0;
  MutationKind mutation = MutationKind::anchored;
  /// Gaussian step as a fraction of max(width, height).
  double gaussian_sigma = 0.02;

  int parent_count() const;
  /// Every violated invariant, empty when valid.
  std::vector<std::string> violations() const;
  /// Throws ConfigError listing all violations.
  void validate() const;
};

/// Maps an evaluated placement to the scalar being maximized.
struct Objective {
  std::string name;
  std::function<double(const Scenario&, const FitnessReport&)> score;
};

/// H_cov - H_con.
Objective entropy_objective();

struct Individual {
  Placement placement;
  FitnessReport report;
  double score = 0.0;
};

enum class Termination { iterations_exhausted, target_reached };

const char* to_string(Termination t);

struct GenerationStats {
  int generation = 0;
  double best_fitness = 0.0;  // best objective value in the generation
  double mean_fitness = 0.0;
  int psi = 0;  // of the generation's best individual
  int phi = 0;
};

struct RunTrace {
  std::string objective;
  std::vector<GenerationStats> generations;
  Termination termination = Termination::iterations_exhausted;
  long long evaluations = 0;
  double wall_ms = 0.0;
};

struct RunResult {
  Individual best;
  RunTrace trace;
};

Individual make_individual(const Scenario& s, Placement p, const Objective& objective);

/// population_size random placements, each evaluated.
std::vector<Individual> initialize(const Scenario& s, const GaConfig& cfg, Rng& rng,
                                   const Objective& objective);
std::vector<Individual> initialize(const Scenario& s, const GaConfig& cfg);

/// Population indices ranked by descending score, ties by lower index.
std::vector<std::size_t> rank(const std::vector<Individual>& pop);

/// Top floor(parent_fraction * |pop|) indices, best first.
std::vector<std::size_t> select_parents(const std::vector<Individual>& pop, const GaConfig& cfg);

/// Single-point crossover at a cut drawn uniformly from {1, ..., m-1}.
/// For m == 1 the parents are returned unchanged. Throws on length mismatch.
std::pair<Placement, Placement> crossover(const Placement& a, const Placement& b, Rng& rng);

/// Deterministic variant with an explicit cut k in [1, m-1].
std::pair<Placement, Placement> crossover_at(const Placement& a, const Placement& b, int k);

/// clamp(base * (1 - max(fitness, 0)), min, base).
double mutation_rate(double fitness, const GaConfig& cfg);

/// Each router is independently altered with probability mutation_rate(fitness).
/// `link_range` is the anchored operator's reach; with a single router or a
/// zero reach, anchored falls back to resampling.
Placement mutate(Placement p, double fitness, const GaConfig& cfg, const AreaSpec& area, Rng& rng,
                 double link_range = 0.0);

/// Generational loop: rank, carry elites, pair parents uniformly with
/// replacement, crossover, mutate, evaluate, until the iteration budget is
/// spent or the best score reaches target_fitness.
RunResult run_ga(const Scenario& s, const GaConfig& cfg, const Objective& objective);

/// run_ga with the entropy objective.
RunResult run_mega(const Scenario& s, const GaConfig& cfg);

}  // namespace mega
