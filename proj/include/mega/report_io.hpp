#pragma once

#include <filesystem>
#include <string>

#include "mega/baselines.hpp"

namespace mega {

inline constexpr const char* kVersion = "0.1.0";

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

/// Per-generation CSV: generation,best_fitness,mean_fitness,psi,phi.
std::string trace_csv(const RunTrace& trace);

struct RunInfo {
  Algorithm algorithm = Algorithm::mega;
  GaConfig ga;
  bool record_timing = false;  // wall_ms is written as 0 otherwise
};

/// JSON document with the fitness report, the best placement, run metadata
/// and a config hash.
std::string report_json(const Scenario& s, const RunResult& result, const RunInfo& info);

/// Reads the "placement" array back from a report JSON document.
Placement placement_from_report(const std::string& text);

std::string ga_config_json(const GaConfig& cfg);
/// Overlays the keys present in `text` onto `base`.
GaConfig ga_config_from_json(const std::string& text, GaConfig base = {});

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace mega
