#pragma once

#include <stdexcept>
#include <string>

namespace ivmc {

// Library-wide error type. Messages name the violated precondition,
// predicate or bound so CLI consumers can surface them verbatim.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ivmc
