#include <algorithm>
#include <numeric>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "mega/errors.hpp"
#include "mega/netmodel.hpp"
#include "oracles.hpp"

using namespace mega;
using fixtures::points;

namespace {

void check_against_oracles(const Scenario& s, const Placement& p) {
  const CoverageAssignment cov = compute_coverage(s, p);
  const oracle::Coverage ref = oracle::naive_coverage(s, p);
  REQUIRE(cov.assigned == ref.assigned);
  REQUIRE(cov.per_router == ref.per_router);
  REQUIRE(cov.covered() == ref.psi);

  const ComponentDecomposition dec = decompose(s, p, cov);
  const auto comps = oracle::bfs_components(s, p, ref.assigned);
  REQUIRE(dec.count() == static_cast<int>(comps.size()));
  for (std::size_t c = 0; c < comps.size(); ++c) {
    REQUIRE(dec.components[c].routers == comps[c].routers);
    REQUIRE(dec.components[c].clients == comps[c].clients);
  }
}

}  // namespace

TEST_CASE("coverage of three disjoint client triples") {
  const auto s = fixtures::three_disjoint_triples();
  const auto cov = compute_coverage(s, fixtures::three_spread_routers());
  CHECK(cov.covered() == 9);
  CHECK(cov.per_router == std::vector<int>{3, 3, 3});
}

TEST_CASE("coverage is empty when every client is out of range") {
  const Scenario s({1000, 1000}, points({{10, 10}, {990, 990}, {10, 990}}), 2, 50, 0);
  const Placement p(points({{500, 500}, {600, 400}}));
  const auto cov = compute_coverage(s, p);
  CHECK(cov.covered() == 0);
  CHECK(std::all_of(cov.assigned.begin(), cov.assigned.end(),
                    [](int a) { return a == CoverageAssignment::kUncovered; }));
  CHECK(cov.per_router == std::vector<int>{0, 0});
}

TEST_CASE("coverage uses closed disks") {
  // 3-4-5 triangle: the client sits exactly on the disk boundary.
  const Scenario s({100, 100}, points({{13, 14}}), 1, 5, 0);
  const auto cov = compute_coverage(s, Placement(points({{10, 10}})));
  CHECK(cov.covered() == 1);
}

TEST_CASE("nearest-router ties go to the lowest index") {
  const Scenario s({100, 100}, points({{50, 50}}), 2, 20, 0);
  const auto a = compute_coverage(s, Placement(points({{40, 50}, {60, 50}})));
  CHECK(a.assigned[0] == 0);
  const auto b = compute_coverage(s, Placement(points({{60, 50}, {40, 50}})));
  CHECK(b.assigned[0] == 0);
}

TEST_CASE("client goes to the nearest of several covering routers") {
  const Scenario s({100, 100}, points({{50, 50}}), 3, 30, 0);
  const auto cov = compute_coverage(s, Placement(points({{75, 50}, {45, 50}, {50, 70}})));
  CHECK(cov.assigned[0] == 1);
  CHECK(cov.per_router == std::vector<int>{0, 1, 0});
}

TEST_CASE("random 20-client / 4-router instance matches the brute-force double loop") {
  const Scenario s = generate_scenario(20, 4, 300, {1000, 1000}, 99);
  Rng rng(5);
  const Placement p = random_placement(s, rng);
  const auto cov = compute_coverage(s, p);
  const auto ref = oracle::naive_coverage(s, p);
  CHECK(cov.covered() == ref.psi);
  CHECK(cov.assigned == ref.assigned);
}

TEST_CASE("chained routers form a single component") {
  const auto s = fixtures::three_chained_triples();
  const auto p = fixtures::three_chained_routers();
  const auto dec = decompose(s, p, compute_coverage(s, p));
  CHECK(dec.count() == 1);
  CHECK(dec.components[0].routers == std::vector<int>{0, 1, 2});
  CHECK(dec.components[0].size() == 12);
  CHECK(connectivity(dec) == 12);
}

TEST_CASE("router links use a closed 2*CR bound") {
  const Scenario s({1000, 1000}, points({{0, 0}}), 2, 100, 0);
  const auto linked = Placement(points({{100, 500}, {300, 500}}));
  CHECK(decompose(s, linked, compute_coverage(s, linked)).count() == 1);
  const auto apart = Placement(points({{100, 500}, {300.0001, 500}}));
  CHECK(decompose(s, apart, compute_coverage(s, apart)).count() == 2);
}

TEST_CASE("single router yields one component of size 1 + n_1") {
  const Scenario s = generate_scenario(40, 1, 400, {2000, 2000}, 3);
  const Placement p(points({{1000, 1000}}));
  const auto cov = compute_coverage(s, p);
  const auto dec = decompose(s, p, cov);
  REQUIRE(dec.count() == 1);
  CHECK(dec.components[0].size() == 1 + cov.per_router[0]);
}

TEST_CASE("disjoint triples form three components of four nodes") {
  const auto s = fixtures::three_disjoint_triples();
  const auto p = fixtures::three_spread_routers();
  const auto dec = decompose(s, p, compute_coverage(s, p));
  CHECK(dec.count() == 3);
  CHECK(dec.sizes() == std::vector<int>{4, 4, 4});
  CHECK(connectivity(dec) == 4);
}

TEST_CASE("random 30-node instance matches the BFS oracle") {
  const Scenario s = generate_scenario(24, 6, 150, {1000, 1000}, 1234);
  Rng rng(77);
  check_against_oracles(s, random_placement(s, rng));
}

TEST_CASE("uncovered clients belong to no component") {
  const Scenario s({1000, 1000}, points({{100, 100}, {900, 900}}), 1, 50, 0);
  const Placement p(points({{120, 100}}));
  const auto dec = decompose(s, p, compute_coverage(s, p));
  REQUIRE(dec.count() == 1);
  CHECK(dec.components[0].clients == std::vector<int>{0});
}

TEST_CASE("grid of routers covering and linking everything gives Phi = n + m") {
  PointSet r(2, 20);
  int k = 0;
  for (double y : {250.0, 750.0, 1250.0, 1750.0})
    for (double x : {200.0, 600.0, 1000.0, 1400.0, 1800.0}) r.col(k++) << x, y;
  const Scenario s = generate_scenario(100, 20, 400, {2000, 2000}, 11);
  const Placement p(r);
  const auto cov = compute_coverage(s, p);
  const auto dec = decompose(s, p, cov);
  CHECK(cov.covered() == 100);
  CHECK(dec.count() == 1);
  CHECK(connectivity(dec) == 120);
}

TEST_CASE("single router covering nothing has Phi = 1") {
  const Scenario s({1000, 1000}, points({{0, 0}}), 1, 10, 0);
  const Placement p(points({{500, 500}}));
  CHECK(connectivity(decompose(s, p, compute_coverage(s, p))) == 1);
}

TEST_CASE("connectivity equals the max of independently recounted sizes") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Scenario s = generate_scenario(40, 8, 180, {1500, 1500}, seed);
    Rng rng(seed + 100);
    const Placement p = random_placement(s, rng);
    const auto dec = decompose(s, p, compute_coverage(s, p));
    int recount = 0;
    for (const auto& c : dec.components)
      recount = std::max(recount, static_cast<int>(c.routers.size() + c.clients.size()));
    CHECK(connectivity(dec) == recount);
  }
}

TEST_CASE("properties: size accounting and oracle equivalence on random instances") {
  Rng gen(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(gen.below(50));
    const int m = 1 + static_cast<int>(gen.below(10));
    const double cr = gen.uniform(20.0, 600.0);
    const Scenario s = generate_scenario(n, m, cr, {1000, 800}, gen.next());
    const Placement p = random_placement(s, gen);
    check_against_oracles(s, p);

    const auto cov = compute_coverage(s, p);
    const auto dec = decompose(s, p, cov);
    const int psi = cov.covered();
    const auto sizes = dec.sizes();
    CHECK(psi >= 0);
    CHECK(psi <= n);
    CHECK(std::accumulate(cov.per_router.begin(), cov.per_router.end(), 0) == psi);
    CHECK(std::accumulate(sizes.begin(), sizes.end(), 0) == m + psi);
    CHECK(connectivity(dec) <= m + psi);
    CHECK((connectivity(dec) == m + psi) == (dec.count() == 1));
    for (std::size_t i = 0; i < cov.assigned.size(); ++i) {
      const int r = cov.assigned[i];
      if (r < 0) continue;
      CHECK((s.clients().col(i) - p.router(r)).norm() <= cr * (1 + 1e-12));
    }
  }
}

TEST_CASE("properties: reordering routers permutes assignments only") {
  Rng gen(31337);
  for (int trial = 0; trial < 50; ++trial) {
    const Scenario s = generate_scenario(40, 8, gen.uniform(50, 400), {1000, 1000}, gen.next());
    const Placement p = random_placement(s, gen);
    std::vector<int> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    std::reverse(perm.begin(), perm.end());
    PointSet q(2, 8);
    for (int j = 0; j < 8; ++j) q.col(j) = p.router(perm[j]);
    const Placement pq(q);

    const auto a = compute_coverage(s, p);
    const auto b = compute_coverage(s, pq);
    CHECK(a.covered() == b.covered());
    for (std::size_t i = 0; i < a.assigned.size(); ++i) {
      if (a.assigned[i] < 0) {
        CHECK(b.assigned[i] < 0);
      } else {
        // Equal-distance ties are measure-zero for random coordinates.
        CHECK(perm[b.assigned[i]] == a.assigned[i]);
      }
    }
    auto da = decompose(s, p, a).sizes();
    auto db = decompose(s, pq, b).sizes();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    CHECK(da == db);
  }
}

TEST_CASE("tiny radius relative to the area still matches the oracle") {
  const Scenario s = generate_scenario(50, 10, 0.5, {100000, 100000}, 8);
  Rng rng(9);
  PointSet r(2, 10);
  // Put routers on top of clients so some coverage exists.
  for (int j = 0; j < 10; ++j) r.col(j) = s.clients().col(j) + Point(0.3, 0.0);
  check_against_oracles(s, Placement(r));
  CHECK(compute_coverage(s, Placement(r)).covered() >= 10);
}

TEST_CASE("validate_placement") {
  const Scenario s({100, 100}, points({{1, 1}}), 2, 10, 0);
  CHECK_NOTHROW(validate_placement(s, Placement(points({{0, 0}, {100, 100}}))));
  CHECK_THROWS_AS(validate_placement(s, Placement(points({{0, 0}}))), InvalidArgument);
  CHECK_THROWS_AS(validate_placement(s, Placement(points({{0, 0}, {100.5, 1}}))), InvalidArgument);
}

TEST_CASE("edge list dump") {
  const auto s = fixtures::three_chained_triples();
  const auto p = fixtures::three_chained_routers();
  std::ostringstream out;
  write_edge_list(out, s, p, compute_coverage(s, p));
  const std::string text = out.str();
  CHECK(text.find("rr 0 1\n") != std::string::npos);
  CHECK(text.find("rr 1 2\n") != std::string::npos);
  CHECK(text.find("rr 0 2\n") == std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 2 + 9);
}
