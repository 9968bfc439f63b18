// Command-line front end for the mesh-router placement benchmark.
//
//   mega_cli generate --n 100 --m 20 --cr 200 --seed 1 --out s.scn
//   mega_cli optimize --scenario s.scn --out-dir run/
//   mega_cli sweep --kind vary_routers --values 5,10,20,40 --trials 20 --out-dir sweep/
//   mega_cli render --scenario s.scn --placement run/report.json --out p.svg
//
// Exit codes: 0 success, 2 usage error, 3 I/O or file-format error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "mega/baselines.hpp"
#include "mega/errors.hpp"
#include "mega/experiment.hpp"
#include "mega/report_io.hpp"
#include "mega/scenario.hpp"
#include "mega/svg.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int default_workers() {
  if (const char* env = std::getenv("MEGA_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid MEGA_WORKERS='" << env << "'\n";
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw mega::IoError("cannot create directory " + dir.string() + ": " + ec.message());
}

mega::MutationKind parse_mutation(const std::string& s) {
  if (auto k = mega::parse_mutation_kind(s)) return *k;
  throw UsageError("unknown mutation kind '" + s + "'");
}

struct GenerateArgs {
  int n = 0;
  int m = 20;
  double cr = 200.0;
  double width = 2000.0;
  double height = 2000.0;
  std::uint64_t seed = 1;
  std::string out;
};

struct GaArgs {
  int iterations = 1000;
  int population = 50;
  std::uint64_t seed = 1;
  std::string mutation = "anchored";
  std::string ga_config;
};

struct OptimizeArgs {
  std::string scenario;
  std::string algorithm = "mega";
  GaArgs ga;
  long long budget = 0;
  std::string out_dir = ".";
  bool edges = false;
  bool record_timing = false;
};

struct SweepArgs {
  std::string config;
  std::string kind;
  std::vector<double> values;
  int n = 100;
  int m = 20;
  double cr = 200.0;
  double width = 2000.0;
  double height = 2000.0;
  int trials = 50;
  GaArgs ga;
  std::vector<std::string> algorithms;
  std::uint64_t base_seed = 1;
  int workers = 0;
  std::string out_dir = ".";
  std::string literature;
  bool record_timing = false;
};

struct RenderArgs {
  std::string scenario;
  std::string placement;
  std::string out;
};

void add_ga_options(CLI::App* cmd, GaArgs& ga) {
  cmd->add_option("--iterations", ga.iterations, "Generations to run")->check(CLI::NonNegativeNumber);
  cmd->add_option("--population", ga.population, "Population size")->check(CLI::PositiveNumber);
  cmd->add_option("--mutation", ga.mutation, "Mutation operator: resample | gaussian | anchored");
  cmd->add_option("--ga-config", ga.ga_config, "JSON file with GA parameters");
}

mega::GaConfig build_ga(const GaArgs& a, CLI::App* cmd) {
  mega::GaConfig cfg;
  if (!a.ga_config.empty()) cfg = mega::ga_config_from_json(mega::read_file(a.ga_config), cfg);
  if (cmd->count("--iterations") || a.ga_config.empty()) cfg.max_iterations = a.iterations;
  if (cmd->count("--population") || a.ga_config.empty()) cfg.population_size = a.population;
  if (cmd->count("--mutation")) cfg.mutation = parse_mutation(a.mutation);
  return cfg;
}

int run_generate(const GenerateArgs& a) {
  const auto s = mega::generate_scenario(a.n, a.m, a.cr, {a.width, a.height}, a.seed);
  mega::save_scenario(s, a.out);
  std::cout << "wrote " << a.out << " (" << s.client_count() << " clients)\n";
  return 0;
}

int run_optimize(const OptimizeArgs& a, CLI::App* cmd) {
  const auto alg = mega::parse_algorithm(a.algorithm);
  if (!alg) throw UsageError("unknown algorithm '" + a.algorithm + "'");
  const mega::Scenario s = mega::load_scenario(a.scenario);
  mega::GaConfig cfg = build_ga(a.ga, cmd);
  if (cmd->count("--seed") || a.ga.ga_config.empty()) cfg.seed = a.ga.seed;
  cfg.validate();

  mega::RunResult r;
  if (*alg == mega::Algorithm::random_search && a.budget > 0)
    r = mega::run_random_search(s, a.budget, cfg.seed, cfg.population_size);
  else
    r = mega::run_algorithm(*alg, s, cfg);

  const fs::path dir(a.out_dir);
  ensure_dir(dir);
  mega::write_file(dir / "report.json",
                   mega::report_json(s, r, {*alg, cfg, a.record_timing}));
  mega::write_file(dir / "trace.csv", mega::trace_csv(r.trace));
  mega::write_file(dir / "placement.svg", mega::render_svg(s, r.best.placement));
  if (a.edges) {
    std::ostringstream edges;
    mega::write_edge_list(edges, s, r.best.placement, mega::compute_coverage(s, r.best.placement));
    mega::write_file(dir / "edges.txt", edges.str());
  }

  const auto& rep = r.best.report;
  std::cout << "algorithm=" << a.algorithm << " fitness=" << mega::format_double(rep.fitness)
            << " h_cov=" << mega::format_double(rep.h_cov)
            << " h_con=" << mega::format_double(rep.h_con) << " psi=" << rep.psi
            << " phi=" << rep.phi << " components=" << rep.component_count
            << " generations=" << r.trace.generations.size()
            << " evaluations=" << r.trace.evaluations << '\n';
  return 0;
}

int run_sweep(const SweepArgs& a, CLI::App* cmd) {
  mega::ExperimentConfig cfg;
  if (!a.config.empty()) cfg = mega::experiment_config_from_json(mega::read_file(a.config));
  const bool from_flags = a.config.empty();
  auto set = [&](const char* flag) { return from_flags || cmd->count(flag) > 0; };

  if (!a.kind.empty()) {
    const auto k = mega::parse_sweep_kind(a.kind);
    if (!k) throw UsageError("unknown sweep kind '" + a.kind + "'");
    cfg.kind = *k;
  }
  if (!a.values.empty()) cfg.values = a.values;
  else if (from_flags) {
    switch (cfg.kind) {
      case mega::SweepKind::vary_clients: cfg.values = {50, 100, 150, 200, 250, 300}; break;
      case mega::SweepKind::vary_routers: cfg.values = {5, 10, 15, 20, 25, 30, 35, 40}; break;
      case mega::SweepKind::vary_radius: cfg.values = {50, 100, 150, 200, 250, 300, 350, 400}; break;
      case mega::SweepKind::single: cfg.values = {0}; break;
    }
  }
  if (set("--n")) cfg.n = a.n;
  if (set("--m")) cfg.m = a.m;
  if (set("--cr")) cfg.cr = a.cr;
  if (set("--width")) cfg.area.width = a.width;
  if (set("--height")) cfg.area.height = a.height;
  if (set("--trials")) cfg.trials = a.trials;
  if (set("--base-seed")) cfg.base_seed = a.base_seed;
  if (!a.ga.ga_config.empty() || cmd->count("--iterations") || cmd->count("--population") ||
      cmd->count("--mutation") || from_flags) {
    mega::GaConfig g = cfg.ga;
    if (!a.ga.ga_config.empty()) g = mega::ga_config_from_json(mega::read_file(a.ga.ga_config), g);
    if (set("--iterations")) g.max_iterations = a.ga.iterations;
    if (set("--population")) g.population_size = a.ga.population;
    if (cmd->count("--mutation")) g.mutation = parse_mutation(a.ga.mutation);
    cfg.ga = g;
  }
  if (!a.algorithms.empty()) {
    cfg.algorithms.clear();
    for (const auto& name : a.algorithms) {
      const auto alg = mega::parse_algorithm(name);
      if (!alg) throw UsageError("unknown algorithm '" + name + "'");
      cfg.algorithms.push_back(*alg);
    }
  }
  cfg.validate();

  const int workers = a.workers > 0 ? a.workers : default_workers();
  const auto result = mega::run_experiment(cfg, workers, a.record_timing,
                                           [](std::size_t done, std::size_t total) {
                                             std::cerr << "\rtrials " << done << '/' << total
                                                       << std::flush;
                                           });
  std::cerr << '\n';

  std::vector<mega::LiteratureRow> literature;
  if (cmd->count("--literature")) {
    const fs::path p = a.literature.empty() ? mega::default_literature_path() : fs::path(a.literature);
    literature = mega::parse_literature_csv(mega::read_file(p));
  }

  const fs::path dir(a.out_dir);
  ensure_dir(dir);
  mega::write_file(dir / "config.json", mega::experiment_config_json(cfg));
  mega::write_file(dir / "raw.csv", mega::raw_csv(result));
  mega::write_file(dir / "aggregate.csv", mega::aggregate_csv(result));
  mega::write_file(dir / "summary.json", mega::summary_json(result, literature));

  std::cout << mega::aggregate_csv(result);
  return 0;
}

int run_render(const RenderArgs& a) {
  const mega::Scenario s = mega::load_scenario(a.scenario);
  const mega::Placement p = mega::placement_from_report(mega::read_file(a.placement));
  mega::validate_placement(s, p);
  mega::write_file(a.out, mega::render_svg(s, p));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mesh-router placement with an entropy-driven genetic algorithm"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate a random scenario file");
  generate->add_option("--n", gen.n, "Number of clients")->required()->check(CLI::PositiveNumber);
  generate->add_option("--m", gen.m, "Number of routers")->check(CLI::PositiveNumber);
  generate->add_option("--cr", gen.cr, "Coverage radius in meters");
  generate->add_option("--width", gen.width, "Area width in meters");
  generate->add_option("--height", gen.height, "Area height in meters");
  generate->add_option("--seed", gen.seed, "Random seed");
  generate->add_option("--out", gen.out, "Output scenario file")->required();

  OptimizeArgs opt;
  auto* optimize = app.add_subcommand("optimize", "Optimize router placement for a scenario");
  optimize->add_option("--scenario", opt.scenario, "Scenario file")->required();
  optimize->add_option("--algorithm", opt.algorithm, "mega | random_search | classic_ga");
  optimize->add_option("--seed", opt.ga.seed, "Optimizer seed");
  optimize->add_option("--budget", opt.budget, "Evaluation budget for random_search");
  optimize->add_option("--out-dir", opt.out_dir, "Directory for report.json, trace.csv, placement.svg");
  optimize->add_flag("--edges", opt.edges, "Also write edges.txt");
  optimize->add_flag("--record-timing", opt.record_timing, "Record wall-clock times in outputs");
  add_ga_options(optimize, opt.ga);

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep with repeated trials");
  sweep->add_option("--config", sw.config, "Experiment config JSON (flags override it)");
  sweep->add_option("--kind", sw.kind, "vary_clients | vary_routers | vary_radius | single");
  sweep->add_option("--values", sw.values, "Comma-separated sweep values")->delimiter(',');
  sweep->add_option("--n", sw.n, "Number of clients");
  sweep->add_option("--m", sw.m, "Number of routers");
  sweep->add_option("--cr", sw.cr, "Coverage radius in meters");
  sweep->add_option("--width", sw.width, "Area width in meters");
  sweep->add_option("--height", sw.height, "Area height in meters");
  sweep->add_option("--trials", sw.trials, "Trials per point");
  sweep->add_option("--algorithms", sw.algorithms, "Comma-separated algorithms")->delimiter(',');
  sweep->add_option("--base-seed", sw.base_seed, "Base seed for per-trial seeds");
  sweep->add_option("--workers", sw.workers, "Worker threads (default: $MEGA_WORKERS or cores)");
  sweep->add_option("--out-dir", sw.out_dir, "Output directory");
  sweep->add_option("--literature", sw.literature, "Overlay published values (optional CSV path)")
      ->expected(0, 1);
  sweep->add_flag("--record-timing", sw.record_timing, "Record wall-clock times in outputs");
  add_ga_options(sweep, sw.ga);

  RenderArgs ren;
  auto* render = app.add_subcommand("render", "Render a saved placement as SVG");
  render->add_option("--scenario", ren.scenario, "Scenario file")->required();
  render->add_option("--placement", ren.placement, "Report JSON with a placement")->required();
  render->add_option("--out", ren.out, "Output SVG")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*optimize) return run_optimize(opt, optimize);
    if (*sweep) return run_sweep(sw, sweep);
    if (*render) return run_render(ren);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const mega::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const mega::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const mega::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const mega::MalformedFile& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
