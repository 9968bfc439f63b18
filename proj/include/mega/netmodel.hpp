#pragma once

#include <iosfwd>
#include <vector>

#include "mega/rng.hpp"
#include "mega/scenario.hpp"
#include "mega/types.hpp"

namespace mega {

/// One candidate solution: the positions of the m routers, one per column.
class Placement {
 public:
  Placement() = default;
  explicit Placement(PointSet routers) : routers_(std::move(routers)) {}

  int size() const noexcept { return static_cast<int>(routers_.cols()); }
  const PointSet& routers() const noexcept { return routers_; }
  PointSet& routers() noexcept { return routers_; }
  auto router(int j) const { return routers_.col(j); }

  friend bool operator==(const Placement& a, const Placement& b) {
    return a.routers_.cols() == b.routers_.cols() && a.routers_ == b.routers_;
  }

 private:
  PointSet routers_{2, 0};
};

/// Throws InvalidArgument unless p has router_count routers all inside the area.
void validate_placement(const Scenario& s, const Placement& p);

/// Placement with m routers drawn uniformly over the area.
Placement random_placement(const Scenario& s, Rng& rng);

struct CoverageAssignment {
  static constexpr int kUncovered = -1;

  std::vector<int> assigned;     // per client: router index or kUncovered
  std::vector<int> per_router;   // n_j, clients assigned to router j

  int covered() const noexcept;  // Psi
};

struct SubNetwork {
  std::vector<int> routers;  // ascending
  std::vector<int> clients;  // ascending, covered clients only

  int size() const noexcept { return static_cast<int>(routers.size() + clients.size()); }
};

/// Connected sub-networks of routers (linked within 2*CR) together with the
/// clients assigned to them. Components are ordered by their lowest router.
struct ComponentDecomposition {
  std::vector<SubNetwork> components;
  std::vector<int> router_component;  // component index per router

  std::vector<int> sizes() const;
  int count() const noexcept { return static_cast<int>(components.size()); }
};

CoverageAssignment compute_coverage(const Scenario& s, const Placement& p);

ComponentDecomposition decompose(const Scenario& s, const Placement& p,
                                 const CoverageAssignment& cov);

/// Phi: the size of the largest sub-network.
int connectivity(const ComponentDecomposition& dec);

/// Debug dump: one "kind a b" line per link, kind in {rr, cr}.
void write_edge_list(std::ostream& out, const Scenario& s, const Placement& p,
                     const CoverageAssignment& cov);

}  // namespace mega
