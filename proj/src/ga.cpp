#include "mega/ga.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "mega/errors.hpp"

namespace mega {

int GaConfig::parent_count() const {
  return static_cast<int>(std::floor(parent_fraction * population_size));
}

std::vector<std::string> GaConfig::violations() const {
  std::vector<std::string> v;
  if (population_size < 1) v.emplace_back("population_size must be positive");
  if (max_iterations < 0) v.emplace_back("max_iterations must be non-negative");
  if (!(parent_fraction > 0.0 && parent_fraction <= 1.0))
    v.emplace_back("parent_fraction must lie in (0, 1]");
  else if (population_size >= 1 && parent_count() < 2)
    v.emplace_back("parent_fraction * population_size must select at least 2 parents");
  if (!(base_mutation_rate >= 0.0 && base_mutation_rate <= 1.0))
    v.emplace_back("base_mutation_rate must lie in [0, 1]");
  if (!(min_mutation_rate >= 0.0 && min_mutation_rate <= 1.0))
    v.emplace_back("min_mutation_rate must lie in [0, 1]");
  if (min_mutation_rate > base_mutation_rate)
    v.emplace_back("min_mutation_rate must not exceed base_mutation_rate");
  if (elitism_count < 0) v.emplace_back("elitism_count must be non-negative");
  if (population_size >= 1 && elitism_count >= population_size)
    v.emplace_back("elitism_count must be smaller than population_size");
  if (mutation == MutationKind::gaussian && !(gaussian_sigma > 0.0))
    v.emplace_back("gaussian_sigma must be positive");
  return v;
}

void GaConfig::validate() const {
  auto v = violations();
  if (!v.empty()) throw ConfigError(std::move(v));
}

const char* to_string(MutationKind k) {
  switch (k) {
    case MutationKind::resample:
      return "resample";
    case MutationKind::gaussian:
      return "gaussian";
    case MutationKind::anchored:
      return "anchored";
  }
  return "unknown";
}

std::optional<MutationKind> parse_mutation_kind(std::string_view name) {
  for (MutationKind k : {MutationKind::resample, MutationKind::gaussian, MutationKind::anchored})
    if (name == to_string(k)) return k;
  return std::nullopt;
}

Objective entropy_objective() {
  return {"entropy", [](const Scenario&, const FitnessReport& r) { return r.fitness; }};
}

const char* to_string(Termination t) {
  switch (t) {
    case Termination::iterations_exhausted:
      return "iterations_exhausted";
    case Termination::target_reached:
      return "target_reached";
  }
  return "unknown";
}

Individual make_individual(const Scenario& s, Placement p, const Objective& objective) {
  Individual ind;
  ind.report = evaluate(s, p);
  ind.score = objective.score(s, ind.report);
  ind.placement = std::move(p);
  return ind;
}

std::vector<Individual> initialize(const Scenario& s, const GaConfig& cfg, Rng& rng,
                                   const Objective& objective) {
  cfg.validate();
  std::vector<Individual> pop;
  pop.reserve(static_cast<std::size_t>(cfg.population_size));
  // Draw every placement before evaluating so evaluation never touches the RNG.
  std::vector<Placement> placements;
  for (int i = 0; i < cfg.population_size; ++i) placements.push_back(random_placement(s, rng));
  for (auto& p : placements) pop.push_back(make_individual(s, std::move(p), objective));
  return pop;
}

std::vector<Individual> initialize(const Scenario& s, const GaConfig& cfg) {
  Rng rng(cfg.seed);
  return initialize(s, cfg, rng, entropy_objective());
}

std::vector<std::size_t> rank(const std::vector<Individual>& pop) {
  std::vector<std::size_t> idx(pop.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return pop[a].score > pop[b].score; });
  return idx;
}

std::vector<std::size_t> select_parents(const std::vector<Individual>& pop, const GaConfig& cfg) {
  auto idx = rank(pop);
  const auto k = static_cast<std::size_t>(std::floor(cfg.parent_fraction * pop.size()));
  idx.resize(std::min(k, idx.size()));
  return idx;
}

std::pair<Placement, Placement> crossover_at(const Placement& a, const Placement& b, int k) {
  if (a.size() != b.size()) throw InvalidArgument("crossover parents differ in length");
  const int m = a.size();
  if (k < 1 || k > m - 1) throw InvalidArgument("crossover cut out of range");
  PointSet c1(2, m), c2(2, m);
  c1 << a.routers().leftCols(k), b.routers().rightCols(m - k);
  c2 << b.routers().leftCols(k), a.routers().rightCols(m - k);
  return {Placement(std::move(c1)), Placement(std::move(c2))};
}

std::pair<Placement, Placement> crossover(const Placement& a, const Placement& b, Rng& rng) {
  if (a.size() != b.size()) throw InvalidArgument("crossover parents differ in length");
  if (a.size() < 2) return {a, b};
  const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(a.size() - 1)));
  return crossover_at(a, b, k);
}

double mutation_rate(double fitness, const GaConfig& cfg) {
  const double raw = cfg.base_mutation_rate * (1.0 - std::max(fitness, 0.0));
  return std::clamp(raw, cfg.min_mutation_rate, cfg.base_mutation_rate);
}

Placement mutate(Placement p, double fitness, const GaConfig& cfg, const AreaSpec& area,
                 Rng& rng, double link_range) {
  const double rate = mutation_rate(fitness, cfg);
  const double sigma = cfg.gaussian_sigma * std::max(area.width, area.height);
  auto& r = p.routers();
  for (Eigen::Index j = 0; j < r.cols(); ++j) {
    if (!rng.bernoulli(rate)) continue;
    MutationKind kind = cfg.mutation;
    if (kind == MutationKind::anchored && (r.cols() < 2 || !(link_range > 0.0)))
      kind = MutationKind::resample;
    if (kind == MutationKind::resample) {
      r(0, j) = rng.uniform(0.0, area.width);
      r(1, j) = rng.uniform(0.0, area.height);
    } else if (kind == MutationKind::anchored) {
      auto k = static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(r.cols() - 1)));
      if (k >= j) ++k;
      double dx, dy;
      do {
        dx = rng.uniform(-1.0, 1.0);
        dy = rng.uniform(-1.0, 1.0);
      } while (dx * dx + dy * dy > 1.0);
      r(0, j) = std::clamp(r(0, k) + dx * link_range, 0.0, area.width);
      r(1, j) = std::clamp(r(1, k) + dy * link_range, 0.0, area.height);
    } else {
      const double dx = sigma * rng.normal();
      const double dy = sigma * rng.normal();
      r(0, j) = std::clamp(r(0, j) + dx, 0.0, area.width);
      r(1, j) = std::clamp(r(1, j) + dy, 0.0, area.height);
    }
  }
  return p;
}

namespace {

GenerationStats stats_of(int generation, const std::vector<Individual>& pop) {
  GenerationStats g;
  g.generation = generation;
  std::size_t best = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < pop.size(); ++i) {
    sum += pop[i].score;
    if (pop[i].score > pop[best].score) best = i;
  }
  g.best_fitness = pop[best].score;
  g.mean_fitness = sum / static_cast<double>(pop.size());
  g.psi = pop[best].report.psi;
  g.phi = pop[best].report.phi;
  return g;
}

}  // namespace

RunResult run_ga(const Scenario& s, const GaConfig& cfg, const Objective& objective) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();

  Rng rng(cfg.seed);
  RunResult out;
  out.trace.objective = objective.name;

  std::vector<Individual> pop = initialize(s, cfg, rng, objective);
  out.trace.evaluations = static_cast<long long>(pop.size());
  out.best = pop[rank(pop).front()];

  const auto pop_size = static_cast<std::size_t>(cfg.population_size);
  const auto elites = static_cast<std::size_t>(cfg.elitism_count);

  for (int gen = 1; gen <= cfg.max_iterations && out.best.score < cfg.target_fitness; ++gen) {
    const std::vector<std::size_t> order = rank(pop);
    const std::size_t parent_count = static_cast<std::size_t>(cfg.parent_count());

    std::vector<Individual> next;
    next.reserve(pop_size);
    for (std::size_t e = 0; e < elites; ++e) next.push_back(pop[order[e]]);

    std::vector<Placement> offspring;
    offspring.reserve(pop_size - elites);
    while (offspring.size() < pop_size - elites) {
      const Individual& a = pop[order[rng.below(parent_count)]];
      const Individual& b = pop[order[rng.below(parent_count)]];
      auto [c1, c2] = crossover(a.placement, b.placement, rng);
      const double parent_fitness = 0.5 * (a.score + b.score);
      offspring.push_back(mutate(std::move(c1), parent_fitness, cfg, s.area(), rng, 2.0 * s.coverage_radius()));
      if (offspring.size() < pop_size - elites)
        offspring.push_back(mutate(std::move(c2), parent_fitness, cfg, s.area(), rng, 2.0 * s.coverage_radius()));
    }
    for (auto& p : offspring) next.push_back(make_individual(s, std::move(p), objective));
    out.trace.evaluations += static_cast<long long>(offspring.size());

    pop = std::move(next);
    const GenerationStats g = stats_of(gen, pop);
    out.trace.generations.push_back(g);
    const Individual& gen_best = pop[rank(pop).front()];
    if (gen_best.score > out.best.score) out.best = gen_best;
  }

  out.trace.termination = out.best.score >= cfg.target_fitness ? Termination::target_reached
                                                               : Termination::iterations_exhausted;
  out.trace.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

RunResult run_mega(const Scenario& s, const GaConfig& cfg) {
  return run_ga(s, cfg, entropy_objective());
}

}  // namespace mega
