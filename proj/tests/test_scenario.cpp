#include "amenity/scenario.hpp"

#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "amenity/error.hpp"
#include "amenity/inner.hpp"
#include "amenity/measure.hpp"
#include "amenity/report.hpp"
#include "doctest.h"

using namespace amenity;

namespace {

Json load(const std::string& name) {
  std::ifstream in(std::string(SCENARIO_DIR) + "/" + name);
  REQUIRE(in.good());
  return Json::parse(in);
}

}  // namespace

TEST_CASE("integer ball scenario certifies its schedule") {
  Json report = run_scenario(load("z-balls.json"));
  CHECK(report["certified"] == true);
  CHECK(report["suite"] == "aicm");
  CHECK(report["rows"].size() == 40);
  CHECK(report["stage_max"].size() == 20);
  CHECK(report["stage_max"].back() == "2/41");
  CHECK(report["rows"][0]["norm_defect"] == "0");
}

TEST_CASE("free group ball scenario fails its schedule") {
  Json report = run_scenario(load("f2-balls.json"));
  CHECK(report["certified"] == false);
  CHECK(report["stage_max"].back() == "1458/1457");
}

TEST_CASE("trivial group scenario is exactly invariant") {
  Json report = run_scenario(load("trivial-group.json"));
  CHECK(report["certified"] == true);
  for (const auto& row : report["rows"]) {
    CHECK(row["norm_defect"] == "0");
    CHECK(row["inv_defect"] == "0");
  }
}

TEST_CASE("lamplighter region deficits stay below the loose schedule") {
  Json report = run_scenario(load("lamplighter-foelner.json"));
  CHECK(report["certified"] == true);
  CHECK(report["rows"].size() == 6);
  for (const auto& row : report["rows"]) {
    Rat d = Rat::parse(row["deficit"].get<std::string>());
    CHECK(Rat(0) < d);
    CHECK(d < Rat(2));
  }
}

TEST_CASE("semidirect bound scenario holds every check") {
  Json report = run_scenario(load("sign-theorem23.json"));
  CHECK(report["certified"] == true);
  CHECK(report["rows"].size() == 36);
  for (const auto& row : report["rows"]) {
    CHECK(row["ok"] == true);
    Rat lhs = Rat::parse(row["lhs"].get<std::string>());
    Rat rhs = Rat::parse(row["rhs"].get<std::string>());
    CHECK(lhs <= rhs);
  }
}

TEST_CASE("ball mean scenario reports the known first stage defect") {
  Json report = run_scenario(load("inner-f2.json"));
  CHECK(report["certified"] == true);
  CHECK(report["rows"][0]["stage"] == 1);
  CHECK(report["rows"][0]["label"] == "a");
  CHECK(report["rows"][0]["defect"] == "4/5");
}

TEST_CASE("boundary prefix scenario stays within the displacement bound") {
  Json report = run_scenario(load("boundary-means.json"));
  CHECK(report["certified"] == true);
  CHECK(report["rows"].size() == 24);
  for (const auto& row : report["rows"]) CHECK(row["ok"] == true);
}

TEST_CASE("square root scenario tracks the conjugation deficit") {
  Json report = run_scenario(load("sqrt-f2.json"));
  CHECK(report["certified"] == true);
  CHECK(report["rows"].size() == 15);
  CHECK(std::abs(report["stage_max"][0].get<double>() - 0.8) < 1e-9);

  // the squared indicator defect collapses to the l1 conjugation defect
  auto f2 = Group::free_group(2);
  GFn u5 = uniform(ball(f2, 5));
  double expect = std::max(group_inner_defect(u5, f2->word("a")).to_double(),
                           group_inner_defect(u5, f2->word("b")).to_double());
  CHECK(std::abs(report["stage_max"].back().get<double>() - expect) < 1e-9);
}

TEST_CASE("kernel scenario passes diagonal and positivity checks") {
  Json report = run_scenario(load("kernel-singletons.json"));
  CHECK(report["certified"] == true);
  REQUIRE(report["rows"].size() == 1);
  const auto& row = report["rows"][0];
  CHECK(row["pass"] == true);
  CHECK(std::abs(row["max_diag_defect"].get<double>() - 0.05) < 1e-9);
  CHECK(row["min_eigenvalue"].get<double>() >= -1e-9);
}

TEST_CASE("every shipped scenario validates") {
  for (const char* name :
       {"z-balls.json", "f2-balls.json", "trivial-group.json",
        "lamplighter-foelner.json", "sign-theorem23.json", "inner-f2.json",
        "boundary-means.json", "sqrt-f2.json", "kernel-singletons.json"}) {
    CAPTURE(name);
    CHECK_NOTHROW(validate_scenario(load(name)));
  }
}

TEST_CASE("reports are byte deterministic and round trip") {
  Json a = run_scenario(load("z-balls.json"));
  Json b = run_scenario(load("z-balls.json"));
  CHECK(emit_structured(a) == emit_structured(b));
  CHECK(Json::parse(emit_structured(a)) == a);

  Json c = run_scenario(load("sqrt-f2.json"));
  Json d = run_scenario(load("sqrt-f2.json"));
  CHECK(emit_structured(c) == emit_structured(d));
}

TEST_CASE("tabular rendering carries the verdict") {
  Json report = run_scenario(load("z-balls.json"));
  std::string text = render_tabular(report);
  CHECK(text.find("z-balls  [aicm]") != std::string::npos);
  CHECK(text.find("stage") != std::string::npos);
  CHECK(text.find("certified: yes") != std::string::npos);

  Json failing = run_scenario(load("f2-balls.json"));
  CHECK(render_tabular(failing).find("certified: no") != std::string::npos);
}

TEST_CASE("overrides rewrite the echoed scenario") {
  RunOverrides o;
  o.stages = 5;
  Json report = run_scenario(load("z-balls.json"), o);
  CHECK(report["scenario"]["net"]["stages"] == 5);
  CHECK(report["stage_max"].size() == 5);
  CHECK(report["stage_max"].back() == "2/11");
  CHECK(report["certified"] == false);

  RunOverrides w;
  w.window_radius = 1;
  Json wide = run_scenario(load("z-balls.json"), w);
  CHECK(wide["scenario"]["window"]["moves"].size() == 2);
  CHECK(wide["certified"] == true);

  RunOverrides bad;
  bad.stages = 0;
  CHECK_THROWS_AS(run_scenario(load("z-balls.json"), bad), ConfigError);
}

TEST_CASE("malformed scenarios are rejected") {
  Json sc = load("z-balls.json");

  Json bad = sc;
  bad["suite"] = "unknown";
  CHECK_THROWS_AS(run_scenario(bad), ConfigError);

  bad = sc;
  bad.erase("epsilon");
  CHECK_THROWS_AS(run_scenario(bad), ParseError);

  bad = sc;
  bad["epsilon"] = {"1/2", "1"};
  CHECK_THROWS_AS(run_scenario(bad), ConfigError);

  bad = sc;
  bad["window"]["moves"] = Json::array();
  CHECK_THROWS_AS(run_scenario(bad), ParseError);

  bad = sc;
  bad["window"]["moves"] = {"(1,2)"};
  CHECK_THROWS_AS(run_scenario(bad), ParseError);

  bad = sc;
  bad["net"]["stages"] = 0;
  CHECK_THROWS_AS(run_scenario(bad), ConfigError);

  bad = sc;
  bad["group"] = {{"family", "nope"}};
  CHECK_THROWS_AS(run_scenario(bad), ParseError);

  bad = load("sign-theorem23.json");
  bad["group"] = {{"family", "free_abelian"}, {"rank", 1}};
  CHECK_THROWS_AS(run_scenario(bad), ConfigError);

  bad = load("kernel-singletons.json");
  bad["net"]["cells"].push_back(bad["net"]["cells"][0]);
  CHECK_THROWS_AS(run_scenario(bad), ConfigError);
}

TEST_CASE("families listing names every suite") {
  auto lines = scenario_families();
  CHECK(lines.size() >= 20);
  bool has_aicm = false, has_kernel = false;
  for (const auto& l : lines) {
    if (l.find("aicm") != std::string::npos) has_aicm = true;
    if (l.find("kernel") != std::string::npos) has_kernel = true;
  }
  CHECK(has_aicm);
  CHECK(has_kernel);
}

TEST_CASE("weighted semidirect scenarios build") {
  Json sc = load("sign-theorem23.json");
  sc["group"]["sigma"] = "2/3";
  Json report = run_scenario(sc);
  CHECK(report["certified"] == true);
  for (const auto& row : report["rows"]) CHECK(row["ok"] == true);
}
