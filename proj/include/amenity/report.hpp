#ifndef AMENITY_REPORT_HPP_
#define AMENITY_REPORT_HPP_

#include <string>

#include "amenity/scenario.hpp"

namespace amenity {

// Canonical byte form of a structured report: sorted keys, two-space
// indent, trailing newline. Reruns of the same scenario emit identical
// bytes.
std::string emit_structured(const Json& report);

// Fixed-width text table with the certification verdict and notes.
std::string render_tabular(const Json& report);

bool report_certified(const Json& report);

}  // namespace amenity

#endif  // AMENITY_REPORT_HPP_
