#pragma once

#include "mega/netmodel.hpp"

namespace fixtures {

inline mega::PointSet points(std::initializer_list<std::pair<double, double>> pts) {
  mega::PointSet out(2, static_cast<Eigen::Index>(pts.size()));
  Eigen::Index i = 0;
  for (auto [x, y] : pts) out.col(i++) << x, y;
  return out;
}

/// Three routers 300 m apart on a 1000 m square, CR = 100, each with a
/// private triple of clients 30 m away. Disks are disjoint and the routers
/// are not linked (300 > 2 * CR).
inline mega::Scenario three_disjoint_triples() {
  return mega::Scenario({1000, 1000},
                        points({{230, 500}, {200, 530}, {170, 500},
                                {530, 500}, {500, 530}, {470, 500},
                                {830, 500}, {800, 530}, {770, 500}}),
                        3, 100.0, 0);
}

inline mega::Placement three_spread_routers() {
  return mega::Placement(points({{200, 500}, {500, 500}, {800, 500}}));
}

/// Same client pattern around routers 150 m apart: a single chained
/// component (150 <= 2 * CR) where every client is still nearest its own router.
inline mega::Scenario three_chained_triples() {
  return mega::Scenario({1000, 1000},
                        points({{330, 500}, {300, 530}, {270, 500},
                                {480, 500}, {450, 530}, {420, 500},
                                {630, 500}, {600, 530}, {570, 500}}),
                        3, 100.0, 0);
}

inline mega::Placement three_chained_routers() {
  return mega::Placement(points({{300, 500}, {450, 500}, {600, 500}}));
}

}  // namespace fixtures
