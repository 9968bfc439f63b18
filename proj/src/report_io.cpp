#include "mega/report_io.hpp"

#include <fstream>
#include <sstream>

#include "json_fields.hpp"
#include "mega/errors.hpp"
#include "mega/rng.hpp"

namespace mega {

using nlohmann::json;

namespace detail {

json to_json(const GaConfig& cfg) {
  return json{{"population_size", cfg.population_size},
              {"max_iterations", cfg.max_iterations},
              {"parent_fraction", cfg.parent_fraction},
              {"base_mutation_rate", cfg.base_mutation_rate},
              {"min_mutation_rate", cfg.min_mutation_rate},
              {"elitism_count", cfg.elitism_count},
              {"target_fitness", cfg.target_fitness},
              {"seed", cfg.seed},
              {"mutation", to_string(cfg.mutation)},
              {"gaussian_sigma", cfg.gaussian_sigma}};
}

GaConfig ga_from_json(const json& j, GaConfig cfg) {
  if (!j.is_object()) throw MalformedFile("ga", "expected an object");
  auto get = [&](const char* key, auto& field) {
    if (auto it = j.find(key); it != j.end()) {
      try {
        field = it->get<std::remove_reference_t<decltype(field)>>();
      } catch (const json::exception& e) {
        throw MalformedFile(std::string("ga.") + key, e.what());
      }
    }
  };
  get("population_size", cfg.population_size);
  get("max_iterations", cfg.max_iterations);
  get("parent_fraction", cfg.parent_fraction);
  get("base_mutation_rate", cfg.base_mutation_rate);
  get("min_mutation_rate", cfg.min_mutation_rate);
  get("elitism_count", cfg.elitism_count);
  get("target_fitness", cfg.target_fitness);
  get("seed", cfg.seed);
  get("gaussian_sigma", cfg.gaussian_sigma);
  if (auto it = j.find("mutation"); it != j.end()) {
    auto kind = it->is_string() ? parse_mutation_kind(it->get<std::string>()) : std::nullopt;
    if (!kind) throw MalformedFile("ga.mutation", "unknown mutation kind " + it->dump());
    cfg.mutation = *kind;
  }
  return cfg;
}

}  // namespace detail

std::string format_double(double v) { return json(v).dump(); }

std::string trace_csv(const RunTrace& trace) {
  std::ostringstream out;
  out << "generation,best_fitness,mean_fitness,psi,phi\n";
  for (const auto& g : trace.generations) {
    out << g.generation << ',' << format_double(g.best_fitness) << ','
        << format_double(g.mean_fitness) << ',' << g.psi << ',' << g.phi << '\n';
  }
  return out.str();
}

std::string report_json(const Scenario& s, const RunResult& result, const RunInfo& info) {
  const Individual& best = result.best;
  json placement = json::array();
  for (int j = 0; j < best.placement.size(); ++j)
    placement.push_back({best.placement.router(j).x(), best.placement.router(j).y()});

  json config{{"algorithm", to_string(info.algorithm)},
              {"ga", detail::to_json(info.ga)},
              {"scenario_seed", s.seed()},
              {"n", s.client_count()},
              {"m", s.router_count()},
              {"coverage_radius", s.coverage_radius()},
              {"width", s.area().width},
              {"height", s.area().height}};
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(fnv1a(config.dump())));

  json doc{
      {"version", kVersion},
      {"config", config},
      {"config_hash", hash},
      {"report",
       {{"h_cov", best.report.h_cov},
        {"h_con", best.report.h_con},
        {"fitness", best.report.fitness},
        {"objective_score", best.score},
        {"psi", best.report.psi},
        {"phi", best.report.phi},
        {"component_count", best.report.component_count},
        {"coverage_probs", best.report.coverage_probs},
        {"connectivity_probs", best.report.connectivity_probs}}},
      {"placement", placement},
      {"trace",
       {{"objective", result.trace.objective},
        {"generations", result.trace.generations.size()},
        {"termination", to_string(result.trace.termination)},
        {"evaluations", result.trace.evaluations},
        {"wall_ms", info.record_timing ? result.trace.wall_ms : 0.0}}},
      {"decisions",
       {{"coverage_counting", "assigned_only_nearest_router_lowest_index_tie"},
        {"single_router_h_cov", s.router_count() == 1 ? "covered_fraction_applied"
                                                       : "not_applicable"},
        {"connectivity_denominator", "n_plus_m"},
        {"parent_pairing", "uniform_with_replacement"},
        {"mutation_rate", "linear_decay_clamped"}}}};
  return doc.dump(2) + "\n";
}

Placement placement_from_report(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedFile("document", e.what());
  }
  auto it = doc.find("placement");
  if (it == doc.end() || !it->is_array()) throw MalformedFile("placement", "missing array");
  PointSet routers(2, static_cast<Eigen::Index>(it->size()));
  for (std::size_t j = 0; j < it->size(); ++j) {
    const json& r = (*it)[j];
    if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number())
      throw MalformedFile("placement[" + std::to_string(j) + "]", "expected [x, y]");
    routers(0, static_cast<Eigen::Index>(j)) = r[0].get<double>();
    routers(1, static_cast<Eigen::Index>(j)) = r[1].get<double>();
  }
  return Placement(std::move(routers));
}

std::string ga_config_json(const GaConfig& cfg) { return detail::to_json(cfg).dump(2); }

GaConfig ga_config_from_json(const std::string& text, GaConfig base) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedFile("document", e.what());
  }
  return detail::ga_from_json(doc, base);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace mega
