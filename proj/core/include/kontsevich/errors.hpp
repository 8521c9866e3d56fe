#pragma once

#include <stdexcept>
#include <string>

namespace kontsevich {

// An enumeration or polynomial would exceed a configured size cap.
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A Laurent division left a remainder.  The quotients taken here are exact
// whenever the implementation is correct, so this signals a broken invariant
// rather than bad input.
struct InexactDivision : std::logic_error {
  explicit InexactDivision(const std::string& what) : std::logic_error(what) {}
};

}  // namespace kontsevich
