#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "amenity/error.hpp"
#include "amenity/report.hpp"
#include "amenity/scenario.hpp"

using namespace amenity;

namespace {

int load(const std::string& path, Json& out) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return 2;
  }
  try {
    out = Json::parse(in);
  } catch (const Json::exception& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-window amenability defect reports"};
  app.require_subcommand(1);

  std::string run_path, format = "structured", out_path;
  int stages = 0, radius = 0;
  auto* run = app.add_subcommand("run", "run a scenario file");
  run->add_option("scenario", run_path, "scenario json file")->required();
  run->add_option("--format", format, "structured | tabular")
      ->check(CLI::IsMember({"structured", "tabular"}));
  run->add_option("--out", out_path, "write the report to this file");
  run->add_option("--stages", stages, "override the net stage count");
  run->add_option("--window-radius", radius,
                  "replace the window moves by the ball of this radius");

  auto* families =
      app.add_subcommand("list-families", "print the supported blocks");

  std::string check_path;
  auto* validate = app.add_subcommand("validate", "check a scenario builds");
  validate->add_option("scenario", check_path, "scenario json file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (families->parsed()) {
      for (const auto& line : scenario_families()) std::cout << line << "\n";
      return 0;
    }
    if (validate->parsed()) {
      Json sc;
      if (int rc = load(check_path, sc)) return rc;
      validate_scenario(sc);
      std::cout << "ok\n";
      return 0;
    }
    Json sc;
    if (int rc = load(run_path, sc)) return rc;
    RunOverrides o;
    if (stages > 0) o.stages = stages;
    if (radius > 0) o.window_radius = radius;
    Json report = run_scenario(sc, o);
    std::string text =
        format == "tabular" ? render_tabular(report) : emit_structured(report);
    if (!out_path.empty()) {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 2;
      }
      out << text;
    } else {
      std::cout << text;
    }
    return report_certified(report) ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
