#include "mega/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "json_fields.hpp"
#include "mega/errors.hpp"
#include "mega/report_io.hpp"
#include "mega/rng.hpp"

namespace mega {

using nlohmann::json;

const char* to_string(SweepKind k) {
  switch (k) {
    case SweepKind::vary_clients:
      return "vary_clients";
    case SweepKind::vary_routers:
      return "vary_routers";
    case SweepKind::vary_radius:
      return "vary_radius";
    case SweepKind::single:
      return "single";
  }
  return "unknown";
}

std::optional<SweepKind> parse_sweep_kind(std::string_view name) {
  for (SweepKind k : {SweepKind::vary_clients, SweepKind::vary_routers, SweepKind::vary_radius,
                      SweepKind::single})
    if (name == to_string(k)) return k;
  return std::nullopt;
}

std::vector<std::string> ExperimentConfig::violations() const {
  std::vector<std::string> v;
  if (values.empty()) v.emplace_back("sweep values must not be empty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) v.push_back("sweep value " + std::to_string(i) + " is not finite");
    if (i > 0 && !(values[i] > values[i - 1]))
      v.emplace_back("sweep values must be strictly increasing");
  }
  switch (kind) {
    case SweepKind::vary_clients:
    case SweepKind::vary_routers:
      for (double x : values)
        if (!(x >= 1.0) || std::floor(x) != x || x > 1e7)
          v.push_back("sweep value " + format_double(x) + " must be a positive integer");
      break;
    case SweepKind::vary_radius:
      for (double x : values)
        if (!(x > 0.0)) v.push_back("sweep value " + format_double(x) + " must be positive");
      break;
    case SweepKind::single:
      if (values.size() != 1) v.emplace_back("a single run takes exactly one value (a label)");
      break;
  }
  if (n < 1) v.emplace_back("n must be >= 1");
  if (m < 1) v.emplace_back("m must be >= 1");
  if (!(cr > 0.0)) v.emplace_back("cr must be positive");
  if (!(area.width > 0.0) || !(area.height > 0.0)) v.emplace_back("area must be non-degenerate");
  if (trials < 1) v.emplace_back("trials must be >= 1");
  if (algorithms.empty()) v.emplace_back("at least one algorithm is required");
  if (std::set<Algorithm>(algorithms.begin(), algorithms.end()).size() != algorithms.size())
    v.emplace_back("algorithms must not repeat");
  for (const auto& g : ga.violations()) v.push_back("ga: " + g);
  return v;
}

void ExperimentConfig::validate() const {
  auto v = violations();
  if (!v.empty()) throw ConfigError(std::move(v));
}

Summary summarize(const std::vector<double>& xs) {
  Summary s;
  if (xs.empty()) return s;
  double sum = 0.0;
  s.min = s.max = xs.front();
  for (double x : xs) {
    sum += x;
    s.min = std::min(s.min, x);
    s.max = std::max(s.max, x);
  }
  s.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return s;
}

std::uint64_t scenario_seed(std::uint64_t base_seed, double x, int trial) {
  return derive_seed(base_seed, {fnv1a("scenario"), std::bit_cast<std::uint64_t>(x),
                                 static_cast<std::uint64_t>(trial)});
}

std::uint64_t trial_seed(std::uint64_t base_seed, Algorithm a, double x, int trial) {
  return derive_seed(base_seed, {fnv1a(to_string(a)), std::bit_cast<std::uint64_t>(x),
                                 static_cast<std::uint64_t>(trial)});
}

Scenario trial_scenario(const ExperimentConfig& cfg, double x, int trial) {
  int n = cfg.n;
  int m = cfg.m;
  double cr = cfg.cr;
  switch (cfg.kind) {
    case SweepKind::vary_clients:
      n = static_cast<int>(x);
      break;
    case SweepKind::vary_routers:
      m = static_cast<int>(x);
      break;
    case SweepKind::vary_radius:
      cr = x;
      break;
    case SweepKind::single:
      break;
  }
  return generate_scenario(n, m, cr, cfg.area, scenario_seed(cfg.base_seed, x, trial));
}

TrialRow run_trial(const ExperimentConfig& cfg, Algorithm a, double x, int trial,
                   bool record_timing) {
  const Scenario s = trial_scenario(cfg, x, trial);
  GaConfig ga = cfg.ga;
  ga.seed = trial_seed(cfg.base_seed, a, x, trial);
  const RunResult r = run_algorithm(a, s, ga);

  TrialRow row;
  row.kind = cfg.kind;
  row.algorithm = a;
  row.x = x;
  row.trial = trial;
  row.seed = ga.seed;
  row.scenario_seed = s.seed();
  row.psi = r.best.report.psi;
  row.phi = r.best.report.phi;
  row.h_cov = r.best.report.h_cov;
  row.h_con = r.best.report.h_con;
  row.fitness = r.best.report.fitness;
  row.generations = static_cast<int>(r.trace.generations.size());
  row.evaluations = r.trace.evaluations;
  row.wall_ms = record_timing ? r.trace.wall_ms : 0.0;
  return row;
}

std::vector<AggregateRow> aggregate(const ExperimentConfig& cfg,
                                    const std::vector<TrialRow>& rows) {
  std::vector<AggregateRow> out;
  for (Algorithm a : cfg.algorithms) {
    for (double x : cfg.values) {
      std::vector<double> psi, phi, fit;
      for (const auto& r : rows) {
        if (r.algorithm != a || r.x != x) continue;
        psi.push_back(r.psi);
        phi.push_back(r.phi);
        fit.push_back(r.fitness);
      }
      if (psi.empty()) continue;
      AggregateRow g;
      g.algorithm = a;
      g.x = x;
      g.trials = static_cast<int>(psi.size());
      g.psi = summarize(psi);
      g.phi = summarize(phi);
      g.fitness = summarize(fit);
      out.push_back(g);
    }
  }
  return out;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, int workers, bool record_timing,
                                const std::function<void(std::size_t, std::size_t)>& progress) {
  cfg.validate();
  struct Job {
    Algorithm a;
    double x;
    int trial;
  };
  std::vector<Job> jobs;
  for (Algorithm a : cfg.algorithms)
    for (double x : cfg.values)
      for (int t = 0; t < cfg.trials; ++t) jobs.push_back({a, x, t});

  ExperimentResult result;
  result.config = cfg;
  result.config_hash = config_hash(cfg);
  result.rows.resize(jobs.size());

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      result.rows[i] = run_trial(cfg, jobs[i].a, jobs[i].x, jobs[i].trial, record_timing);
      const std::size_t d = ++done;
      if (progress) {
        std::lock_guard lock(progress_mutex);
        progress(d, jobs.size());
      }
    }
  };
  const int n_threads = std::clamp(workers, 1, static_cast<int>(std::max<std::size_t>(jobs.size(), 1)));
  if (n_threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(work);
  }

  result.aggregates = aggregate(cfg, result.rows);
  return result;
}

namespace {

json config_to_json(const ExperimentConfig& cfg) {
  json algs = json::array();
  for (Algorithm a : cfg.algorithms) algs.push_back(to_string(a));
  return json{{"kind", to_string(cfg.kind)},
              {"values", cfg.values},
              {"n", cfg.n},
              {"m", cfg.m},
              {"cr", cfg.cr},
              {"width", cfg.area.width},
              {"height", cfg.area.height},
              {"trials", cfg.trials},
              {"algorithms", algs},
              {"base_seed", cfg.base_seed},
              {"ga", detail::to_json(cfg.ga)}};
}

std::string header_comment(const ExperimentResult& r) {
  return "# mega " + std::string(kVersion) + " config_hash=" + r.config_hash +
         " base_seed=" + std::to_string(r.config.base_seed) + "\n";
}

}  // namespace

std::string experiment_config_json(const ExperimentConfig& cfg) {
  return config_to_json(cfg).dump(2) + "\n";
}

ExperimentConfig experiment_config_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedFile("document", e.what());
  }
  if (!doc.is_object()) throw MalformedFile("document", "expected an object");
  ExperimentConfig cfg;
  auto get = [&](const char* key, auto& field) {
    if (auto it = doc.find(key); it != doc.end()) {
      try {
        field = it->get<std::remove_reference_t<decltype(field)>>();
      } catch (const json::exception& e) {
        throw MalformedFile(key, e.what());
      }
    }
  };
  std::string kind = to_string(cfg.kind);
  get("kind", kind);
  auto k = parse_sweep_kind(kind);
  if (!k) throw MalformedFile("kind", "unknown sweep kind '" + kind + "'");
  cfg.kind = *k;
  get("values", cfg.values);
  get("n", cfg.n);
  get("m", cfg.m);
  get("cr", cfg.cr);
  get("width", cfg.area.width);
  get("height", cfg.area.height);
  get("trials", cfg.trials);
  get("base_seed", cfg.base_seed);
  if (auto it = doc.find("algorithms"); it != doc.end()) {
    if (!it->is_array()) throw MalformedFile("algorithms", "expected an array");
    cfg.algorithms.clear();
    for (const auto& a : *it) {
      auto alg = a.is_string() ? parse_algorithm(a.get<std::string>()) : std::nullopt;
      if (!alg) throw MalformedFile("algorithms", "unknown algorithm " + a.dump());
      cfg.algorithms.push_back(*alg);
    }
  }
  if (auto it = doc.find("ga"); it != doc.end()) cfg.ga = detail::ga_from_json(*it, cfg.ga);
  return cfg;
}

std::string config_hash(const ExperimentConfig& cfg) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(config_to_json(cfg).dump())));
  return buf;
}

std::vector<LiteratureRow> parse_literature_csv(const std::string& text) {
  std::vector<LiteratureRow> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("sweep,", 0) == 0) continue;
    std::vector<std::string> f;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) f.push_back(cell);
    const std::string where = "line " + std::to_string(lineno);
    if (f.size() != 6) throw MalformedFile(where, "expected 6 columns");
    try {
      rows.push_back({f[0], f[1], std::stod(f[2]), std::stod(f[3]), std::stod(f[4]),
                      std::stod(f[5])});
    } catch (const std::exception&) {
      throw MalformedFile(where, "non-numeric value");
    }
  }
  return rows;
}

std::filesystem::path default_literature_path() {
  return std::filesystem::path(MEGA_DATA_DIR) / "literature_values.csv";
}

std::string raw_csv(const ExperimentResult& r) {
  std::ostringstream out;
  out << header_comment(r)
      << "sweep_kind,algorithm,x_value,trial,seed,psi,phi,h_cov,h_con,fitness,generations,"
         "evaluations,wall_ms\n";
  for (const auto& row : r.rows) {
    out << to_string(row.kind) << ',' << to_string(row.algorithm) << ',' << format_double(row.x)
        << ',' << row.trial << ',' << row.seed << ',' << row.psi << ',' << row.phi << ','
        << format_double(row.h_cov) << ',' << format_double(row.h_con) << ','
        << format_double(row.fitness) << ',' << row.generations << ',' << row.evaluations << ','
        << format_double(row.wall_ms) << '\n';
  }
  return out.str();
}

std::string aggregate_csv(const ExperimentResult& r) {
  std::ostringstream out;
  out << header_comment(r)
      << "sweep_kind,algorithm,x_value,trials,psi_mean,psi_std,phi_mean,phi_std,fitness_mean,"
         "fitness_std\n";
  for (const auto& g : r.aggregates) {
    out << to_string(r.config.kind) << ',' << to_string(g.algorithm) << ','
        << format_double(g.x) << ',' << g.trials << ',' << format_double(g.psi.mean) << ','
        << format_double(g.psi.stddev) << ',' << format_double(g.phi.mean) << ','
        << format_double(g.phi.stddev) << ',' << format_double(g.fitness.mean) << ','
        << format_double(g.fitness.stddev) << '\n';
  }
  return out.str();
}

std::string summary_json(const ExperimentResult& r, const std::vector<LiteratureRow>& literature) {
  auto summary = [](const Summary& s) {
    return json{{"mean", s.mean}, {"std", s.stddev}, {"min", s.min}, {"max", s.max}};
  };
  json points = json::array();
  for (const auto& g : r.aggregates) {
    points.push_back({{"algorithm", to_string(g.algorithm)},
                      {"x", g.x},
                      {"trials", g.trials},
                      {"psi", summary(g.psi)},
                      {"phi", summary(g.phi)},
                      {"fitness", summary(g.fitness)}});
  }
  json seeds = json::array();
  for (const auto& row : r.rows)
    seeds.push_back({{"algorithm", to_string(row.algorithm)},
                     {"x", row.x},
                     {"trial", row.trial},
                     {"seed", row.seed},
                     {"scenario_seed", row.scenario_seed}});

  json doc{{"version", kVersion},
           {"config_hash", r.config_hash},
           {"config", config_to_json(r.config)},
           {"metadata",
            {{"rows", r.rows.size()},
             {"scenario_per_trial", "regenerated; seed derived from (base_seed, x, trial)"},
             {"optimizer_seed", "derived from (base_seed, algorithm, x, trial)"},
             {"coverage_counting", "assigned_only_nearest_router_lowest_index_tie"},
             {"single_router_h_cov", "covered_fraction"},
             {"connectivity_denominator", "n_plus_m"},
             {"parent_pairing", "uniform_with_replacement"},
             {"mutation_rate", "linear_decay_clamped"},
             {"seeds", seeds}}},
           {"aggregates", points}};

  if (!literature.empty()) {
    json lit = json::array();
    for (const auto& l : literature) {
      if (l.sweep != to_string(r.config.kind)) continue;
      lit.push_back({{"algorithm", l.algorithm},
                     {"x", l.x},
                     {"coverage", l.coverage},
                     {"connectivity", l.connectivity},
                     {"fitness", l.fitness}});
    }
    doc["literature"] = {{"label", "literature values, not reproduced"}, {"rows", lit}};
  }
  return doc.dump(2) + "\n";
}

}  // namespace mega
