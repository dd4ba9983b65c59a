#pragma once

#include <stdexcept>
#include <string>

namespace leibcas {

/// Bad caller input: dimension or field mismatch, malformed data, violated
/// precondition. Maps to exit code 1 at the CLI boundary.
struct usage_error : std::runtime_error {
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

/// A guarantee the library itself maintains failed. Indicates a bug, not bad
/// input.
struct invariant_violation : std::logic_error {
  explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace leibcas
