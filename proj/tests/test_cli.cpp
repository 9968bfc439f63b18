#include "cli_support.hpp"
#include "doctest.h"
#include "mega/scenario.hpp"

using cli::run;
using cli::slurp;

TEST_CASE("cli generate") {
  cli::ScratchDir dir("gen");
  CHECK(run("generate --n 100 --m 20 --cr 200 --width 2000 --height 2000 --seed 1 --out " +
            (dir / "a.scn")) == 0);
  CHECK(run("generate --n 100 --m 20 --cr 200 --width 2000 --height 2000 --seed 1 --out " +
            (dir / "b.scn")) == 0);
  CHECK(slurp(dir / "a.scn") == slurp(dir / "b.scn"));
  const auto s = mega::load_scenario(dir / "a.scn");
  CHECK(s.client_count() == 100);
  CHECK(s.router_count() == 20);

  CHECK(run("generate --m 20 --out " + (dir / "c.scn")) == 2);
  CHECK(run("generate --n 0 --out " + (dir / "c.scn")) == 2);
  CHECK(run("generate --n 10 --cr -1 --out " + (dir / "c.scn")) == 2);
  CHECK(run("") == 2);
  CHECK(run("frobnicate") == 2);
}

TEST_CASE("cli optimize") {
  cli::ScratchDir dir("opt");
  REQUIRE(run("generate --n 50 --m 20 --cr 200 --seed 5 --out " + (dir / "s.scn")) == 0);

  const std::string base = "optimize --scenario " + (dir / "s.scn") + " --seed 9 ";
  const std::string twenty = base + "--iterations 20 ";
  REQUIRE(run(twenty + "--edges --out-dir " + (dir / "r1")) == 0);
  REQUIRE(run(twenty + "--edges --out-dir " + (dir / "r2")) == 0);
  for (const char* f : {"report.json", "trace.csv", "placement.svg", "edges.txt"})
    CHECK(slurp(dir / (std::string("r1/") + f)) == slurp(dir / (std::string("r2/") + f)));

  SUBCASE("zero iterations reports the best random individual") {
    REQUIRE(run(base + "--iterations 0 --out-dir " + (dir / "z")) == 0);
    CHECK(slurp(dir / "z/trace.csv") == "generation,best_fitness,mean_fitness,psi,phi\n");
    CHECK(slurp(dir / "z/report.json").find("\"evaluations\": 50") != std::string::npos);
  }
  SUBCASE("baselines") {
    CHECK(run(twenty + "--algorithm classic_ga --out-dir " + (dir / "c")) == 0);
    CHECK(run(twenty + "--algorithm random_search --budget 200 --out-dir " + (dir / "rs")) == 0);
  }
  SUBCASE("render reproduces the optimize SVG") {
    REQUIRE(run("render --scenario " + (dir / "s.scn") + " --placement " + (dir / "r1/report.json") +
                " --out " + (dir / "p.svg")) == 0);
    CHECK(slurp(dir / "p.svg") == slurp(dir / "r1/placement.svg"));
  }
  SUBCASE("errors") {
    CHECK(run(twenty + "--algorithm coa --out-dir " + (dir / "e")) == 2);
    CHECK(run(twenty + "--mutation swap --out-dir " + (dir / "e")) == 2);
    CHECK(run(twenty + "--population 1 --out-dir " + (dir / "e")) == 2);
    CHECK(run("optimize --scenario " + (dir / "missing.scn")) == 3);
    mega::write_file(dir / "bad.scn", "{\"version\": 1}");
    CHECK(run("optimize --scenario " + (dir / "bad.scn")) == 3);
  }
}

TEST_CASE("cli sweep") {
  cli::ScratchDir dir("sweep");
  const std::string args =
      "sweep --kind vary_routers --values 5,10 --n 30 --trials 2 --iterations 3 --population 10 "
      "--algorithms mega,random_search,classic_ga --base-seed 7 --literature ";
  REQUIRE(run(args + "--workers 1 --out-dir " + (dir / "a")) == 0);
  REQUIRE(run(args + "--workers 3 --out-dir " + (dir / "b")) == 0);
  for (const char* f : {"config.json", "raw.csv", "aggregate.csv", "summary.json"})
    CHECK(slurp(dir / (std::string("a/") + f)) == slurp(dir / (std::string("b/") + f)));

  // Re-running from the written config gives the same results.
  REQUIRE(run("sweep --config " + (dir / "a/config.json") + " --literature --out-dir " + (dir / "c")) ==
          0);
  CHECK(slurp(dir / "a/raw.csv") == slurp(dir / "c/raw.csv"));

  CHECK(run("sweep --kind vary_routers --values 10,5 --out-dir " + (dir / "e")) == 2);
  CHECK(run("sweep --kind nothing --out-dir " + (dir / "e")) == 2);
  CHECK(run("sweep --config " + (dir / "none.json")) == 3);
}
