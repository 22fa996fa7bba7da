#ifndef AMENITY_ERROR_HPP_
#define AMENITY_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace amenity {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands outside an operation's domain: mixed groups, non-probability
// input where a probability measure is required, and the like.
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Invalid family data at build time: a multiplication table that is not a
// group, an automorphism family that fails its homomorphism spot checks.
struct ConstructionError : Error {
  explicit ConstructionError(const std::string& msg) : Error(msg) {}
};

// Malformed scenario or element text. `where` names the offending field.
struct ParseError : Error {
  ParseError(const std::string& where, const std::string& msg)
      : Error(where + ": " + msg), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// Structurally valid scenario that asks for something unsupported or
// inconsistent (empty window, increasing epsilon schedule, ...).
struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace amenity

#endif  // AMENITY_ERROR_HPP_
