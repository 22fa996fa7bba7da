#ifndef AMENITY_SCENARIO_HPP_
#define AMENITY_SCENARIO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "amenity/action.hpp"
#include "amenity/group.hpp"
#include "amenity/space.hpp"
#include "json.hpp"

namespace amenity {

using Json = nlohmann::json;

// Command-line overrides applied on top of the scenario file.
struct RunOverrides {
  std::optional<int> stages;
  std::optional<int> window_radius;  // replaces the window moves by a ball
};

// Building blocks usable in scenario files, one description per line.
std::vector<std::string> scenario_families();

GroupPtr group_from_json(const Json& j);
SpacePtr space_from_json(const Json& j, const GroupPtr& g);
TransformationGroup transformation_from_json(const Json& scenario);

// Checks the whole scenario builds; throws ParseError or ConfigError.
void validate_scenario(const Json& scenario);

// Runs the scenario's suite and returns the structured report. The report
// echoes the scenario (with overrides applied) so a stored report pins its
// own input.
Json run_scenario(const Json& scenario, const RunOverrides& o = {});

}  // namespace amenity

#endif  // AMENITY_SCENARIO_HPP_
