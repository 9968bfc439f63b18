#include "mega/netmodel.hpp"

#include <algorithm>
#include <ostream>

#include "mega/errors.hpp"
#include "mega/geometry.hpp"

namespace mega {

void validate_placement(const Scenario& s, const Placement& p) {
  if (p.size() != s.router_count())
    throw InvalidArgument("placement has " + std::to_string(p.size()) + " routers, expected " +
                          std::to_string(s.router_count()));
  for (int j = 0; j < p.size(); ++j) {
    if (!s.area().contains(p.router(j)))
      throw InvalidArgument("router " + std::to_string(j) + " lies outside the area");
  }
}

Placement random_placement(const Scenario& s, Rng& rng) {
  PointSet routers(2, s.router_count());
  for (int j = 0; j < s.router_count(); ++j) {
    routers(0, j) = rng.uniform(0.0, s.area().width);
    routers(1, j) = rng.uniform(0.0, s.area().height);
  }
  return Placement(std::move(routers));
}

int CoverageAssignment::covered() const noexcept {
  return static_cast<int>(std::count_if(assigned.begin(), assigned.end(),
                                        [](int a) { return a != kUncovered; }));
}

std::vector<int> ComponentDecomposition::sizes() const {
  std::vector<int> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.size());
  return out;
}

CoverageAssignment compute_coverage(const Scenario& s, const Placement& p) {
  CoverageAssignment cov;
  cov.assigned = nearest_covering(s.clients(), p.routers(), s.area().width, s.area().height,
                                  s.coverage_radius());
  cov.per_router.assign(static_cast<std::size_t>(p.size()), 0);
  for (int a : cov.assigned)
    if (a != CoverageAssignment::kUncovered) ++cov.per_router[static_cast<std::size_t>(a)];
  return cov;
}

ComponentDecomposition decompose(const Scenario& s, const Placement& p,
                                 const CoverageAssignment& cov) {
  ComponentDecomposition dec;
  dec.router_component = router_components(p.routers(), s.area().width, s.area().height,
                                           2.0 * s.coverage_radius());
  const int count =
      dec.router_component.empty()
          ? 0
          : *std::max_element(dec.router_component.begin(), dec.router_component.end()) + 1;
  dec.components.resize(static_cast<std::size_t>(count));
  for (int j = 0; j < p.size(); ++j)
    dec.components[static_cast<std::size_t>(dec.router_component[j])].routers.push_back(j);
  for (std::size_t i = 0; i < cov.assigned.size(); ++i) {
    const int r = cov.assigned[i];
    if (r == CoverageAssignment::kUncovered) continue;
    dec.components[static_cast<std::size_t>(dec.router_component[r])].clients.push_back(
        static_cast<int>(i));
  }
  return dec;
}

int connectivity(const ComponentDecomposition& dec) {
  int best = 0;
  for (const auto& c : dec.components) best = std::max(best, c.size());
  return best;
}

void write_edge_list(std::ostream& out, const Scenario& s, const Placement& p,
                     const CoverageAssignment& cov) {
  const double link = 2.0 * s.coverage_radius();
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j)
      if (within(p.router(i), p.router(j), link)) out << "rr " << i << ' ' << j << '\n';
  for (std::size_t i = 0; i < cov.assigned.size(); ++i)
    if (cov.assigned[i] != CoverageAssignment::kUncovered)
      out << "cr " << i << ' ' << cov.assigned[i] << '\n';
}

}  // namespace mega
