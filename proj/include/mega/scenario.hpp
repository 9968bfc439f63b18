#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "mega/types.hpp"

namespace mega {

struct AreaSpec {
  double width = 2000.0;
  double height = 2000.0;

  bool contains(const Point& p) const {
    return p.x() >= 0.0 && p.x() <= width && p.y() >= 0.0 && p.y() <= height;
  }

  friend bool operator==(const AreaSpec&, const AreaSpec&) = default;
};

/// Immutable problem instance: a client field inside a rectangular area plus
/// the number of routers to place and their common coverage radius.
class Scenario {
 public:
  /// Throws InvalidArgument if any invariant is violated.
  Scenario(AreaSpec area, PointSet clients, int router_count, double coverage_radius,
           std::uint64_t seed);

  const AreaSpec& area() const noexcept { return area_; }
  const PointSet& clients() const noexcept { return clients_; }
  int client_count() const noexcept { return static_cast<int>(clients_.cols()); }
  int router_count() const noexcept { return router_count_; }
  double coverage_radius() const noexcept { return coverage_radius_; }
  std::uint64_t seed() const noexcept { return seed_; }

  friend bool operator==(const Scenario& a, const Scenario& b) {
    return a.area_ == b.area_ && a.router_count_ == b.router_count_ &&
           a.coverage_radius_ == b.coverage_radius_ && a.seed_ == b.seed_ &&
           a.clients_.cols() == b.clients_.cols() && a.clients_ == b.clients_;
  }

 private:
  AreaSpec area_;
  PointSet clients_;
  int router_count_;
  double coverage_radius_;
  std::uint64_t seed_;
};

/// Draws n clients independently and uniformly over the area. A pure
/// function of its arguments.
Scenario generate_scenario(int n, int m, double cr, const AreaSpec& area, std::uint64_t seed);

inline constexpr int kScenarioFormatVersion = 1;

/// Human-readable JSON document; doubles use shortest round-trip decimals.
std::string serialize_scenario(const Scenario& s);
Scenario parse_scenario(const std::string& text);

void save_scenario(const Scenario& s, const std::filesystem::path& path);
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace mega
