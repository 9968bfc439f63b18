#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mega/baselines.hpp"

namespace mega {

enum class SweepKind { vary_clients, vary_routers, vary_radius, single };

const char* to_string(SweepKind k);
std::optional<SweepKind> parse_sweep_kind(std::string_view name);

/// A parameter sweep. Defaults are the benchmark's reference point:
/// n = 100, m = 20, CR = 200 m on a 2000 m x 2000 m area, 50 trials of
/// 1000 iterations with a population of 50.
///
/// For `single` the one entry of `values` is a label only; the fixed
/// parameters are used as given.
struct ExperimentConfig {
  SweepKind kind = SweepKind::single;
  std::vector<double> values{0.0};
  int n = 100;
  int m = 20;
  double cr = 200.0;
  AreaSpec area{2000.0, 2000.0};
  int trials = 50;
  GaConfig ga;  // ga.seed is replaced per trial
  std::vector<Algorithm> algorithms{Algorithm::mega};
  std::uint64_t base_seed = 1;

  std::vector<std::string> violations() const;
  void validate() const;
};

struct TrialRow {
  SweepKind kind = SweepKind::single;
  Algorithm algorithm = Algorithm::mega;
  double x = 0.0;
  int trial = 0;
  std::uint64_t seed = 0;           // optimizer seed
  std::uint64_t scenario_seed = 0;  // client field, shared by all algorithms
  int psi = 0;
  int phi = 0;
  double h_cov = 0.0;
  double h_con = 0.0;
  double fitness = 0.0;
  int generations = 0;
  long long evaluations = 0;
  double wall_ms = 0.0;
};

struct Summary {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 for one trial
  double min = 0.0;
  double max = 0.0;
};

Summary summarize(const std::vector<double>& xs);

struct AggregateRow {
  Algorithm algorithm = Algorithm::mega;
  double x = 0.0;
  int trials = 0;
  Summary psi;
  Summary phi;
  Summary fitness;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::string config_hash;
  std::vector<TrialRow> rows;  // ordered by algorithm, value, trial
  std::vector<AggregateRow> aggregates;
};

/// Client field for one trial; independent of the algorithm so runs are paired.
std::uint64_t scenario_seed(std::uint64_t base_seed, double x, int trial);
/// Optimizer seed for one trial.
std::uint64_t trial_seed(std::uint64_t base_seed, Algorithm a, double x, int trial);

Scenario trial_scenario(const ExperimentConfig& cfg, double x, int trial);
TrialRow run_trial(const ExperimentConfig& cfg, Algorithm a, double x, int trial,
                   bool record_timing = false);

/// Groups rows by (algorithm, value) in config order.
std::vector<AggregateRow> aggregate(const ExperimentConfig& cfg, const std::vector<TrialRow>& rows);

/// Runs all trials on `workers` threads. Output does not depend on the
/// worker count or scheduling.
ExperimentResult run_experiment(const ExperimentConfig& cfg, int workers = 1,
                                bool record_timing = false,
                                const std::function<void(std::size_t, std::size_t)>& progress = {});

std::string experiment_config_json(const ExperimentConfig& cfg);
/// Keys absent from the document keep their defaults.
ExperimentConfig experiment_config_from_json(const std::string& text);
std::string config_hash(const ExperimentConfig& cfg);

/// Published comparison values shipped with the benchmark for overlays.
struct LiteratureRow {
  std::string sweep;
  std::string algorithm;
  double x = 0.0;
  double coverage = 0.0;
  double connectivity = 0.0;
  double fitness = 0.0;
};

std::vector<LiteratureRow> parse_literature_csv(const std::string& text);
std::filesystem::path default_literature_path();

std::string raw_csv(const ExperimentResult& r);
std::string aggregate_csv(const ExperimentResult& r);
std::string summary_json(const ExperimentResult& r, const std::vector<LiteratureRow>& literature = {});

}  // namespace mega
