#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "mega/errors.hpp"
#include "mega/scenario.hpp"

using namespace mega;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("mega_test_" + name);
}

}  // namespace

TEST_CASE("generate_scenario: default-size instance stays in bounds") {
  const Scenario s = generate_scenario(100, 20, 200, {2000, 2000}, 42);
  CHECK(s.client_count() == 100);
  CHECK(s.router_count() == 20);
  CHECK(s.coverage_radius() == 200);
  CHECK(s.seed() == 42);
  for (Eigen::Index i = 0; i < s.clients().cols(); ++i) CHECK(s.area().contains(s.clients().col(i)));
}

TEST_CASE("generate_scenario: minimal instance") {
  const Scenario s = generate_scenario(1, 1, 50, {1, 1}, 0);
  REQUIRE(s.client_count() == 1);
  CHECK(s.area().contains(s.clients().col(0)));
}

TEST_CASE("generate_scenario: same seed gives identical serialized clients") {
  const auto a = serialize_scenario(generate_scenario(64, 5, 100, {2000, 2000}, 7));
  const auto b = serialize_scenario(generate_scenario(64, 5, 100, {2000, 2000}, 7));
  CHECK(a == b);
  const auto c = serialize_scenario(generate_scenario(64, 5, 100, {2000, 2000}, 8));
  CHECK(a != c);
}

TEST_CASE("generate_scenario: invalid dimensions") {
  CHECK_THROWS_AS(generate_scenario(0, 1, 1, {1, 1}, 0), InvalidArgument);
  CHECK_THROWS_AS(generate_scenario(1, 0, 1, {1, 1}, 0), InvalidArgument);
  CHECK_THROWS_AS(generate_scenario(1, 1, 0, {1, 1}, 0), InvalidArgument);
  CHECK_THROWS_AS(generate_scenario(1, 1, -5, {1, 1}, 0), InvalidArgument);
  CHECK_THROWS_AS(generate_scenario(1, 1, 1, {0, 1}, 0), InvalidArgument);
  CHECK_THROWS_AS(generate_scenario(1, 1, 1, {1, -1}, 0), InvalidArgument);
}

TEST_CASE("generate_scenario: quadrant uniformity over 10,000 points") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 12345ULL}) {
    const Scenario s = generate_scenario(10000, 1, 1, {1, 1}, seed);
    int q[4] = {0, 0, 0, 0};
    for (Eigen::Index i = 0; i < s.clients().cols(); ++i) {
      const int qx = s.clients()(0, i) < 0.5 ? 0 : 1;
      const int qy = s.clients()(1, i) < 0.5 ? 0 : 1;
      ++q[qx + 2 * qy];
    }
    for (int c : q) {
      CHECK(c >= 2200);
      CHECK(c <= 2800);
    }
  }
}

TEST_CASE("save/load round trip preserves every field exactly") {
  const Scenario s = generate_scenario(50, 5, 100, {2000, 2000}, 1);
  const auto path = temp_file("roundtrip.scn");
  save_scenario(s, path);
  const Scenario t = load_scenario(path);
  CHECK(t == s);
  std::filesystem::remove(path);
}

TEST_CASE("round trip holds for awkward doubles") {
  // Values whose shortest decimal needs all 17 significant digits.
  PointSet pts(2, 3);
  pts << 0.1 + 0.2, 1.0 / 3.0, 999.9999999999999, 2.2250738585072014e-308, 0.0, 1000.0;
  const Scenario s({1000.0, 1000.0}, pts, 3, std::nextafter(100.0, 200.0), ~0ULL);
  CHECK(parse_scenario(serialize_scenario(s)) == s);
}

TEST_CASE("load rejects malformed files and names the field") {
  const Scenario s = generate_scenario(3, 2, 100, {1000, 1000}, 3);
  const std::string good = serialize_scenario(s);

  SUBCASE("client outside the area") {
    const std::string bad =
        R"({"version": 1, "width": 10, "height": 10, "router_count": 1,
            "coverage_radius": 1, "seed": 0, "clients": [[1, 1], [11, 2]]})";
    try {
      parse_scenario(bad);
      FAIL("expected MalformedFile");
    } catch (const MalformedFile& e) {
      CHECK(e.field() == "clients[1]");
    }
  }
  SUBCASE("truncated document") {
    CHECK_THROWS_AS(parse_scenario(good.substr(0, good.size() / 2)), MalformedFile);
  }
  SUBCASE("missing field") {
    std::string bad = good;
    bad.replace(bad.find("\"router_count\""), std::string("\"router_count\"").size(), "\"routers\"");
    try {
      parse_scenario(bad);
      FAIL("expected MalformedFile");
    } catch (const MalformedFile& e) {
      CHECK(e.field() == "router_count");
    }
  }
  SUBCASE("wrong version") {
    std::string bad = good;
    bad.replace(bad.find("\"version\": 1"), 12, "\"version\": 9");
    CHECK_THROWS_AS(parse_scenario(bad), MalformedFile);
  }
  SUBCASE("non-positive radius") {
    std::string bad = good;
    const auto p = bad.find("\"coverage_radius\": ");
    const auto e = bad.find(',', p);
    bad.replace(p, e - p, "\"coverage_radius\": -1");
    try {
      parse_scenario(bad);
      FAIL("expected MalformedFile");
    } catch (const MalformedFile& ex) {
      CHECK(ex.field() == "coverage_radius");
    }
  }
}

TEST_CASE("load of a missing file is an I/O error") {
  CHECK_THROWS_AS(load_scenario("/nonexistent/dir/file.scn"), IoError);
}
