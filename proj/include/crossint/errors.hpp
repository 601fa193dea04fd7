#pragma once

#include <stdexcept>
#include <string>

namespace crossint {

// Violated theorem/operation precondition; the message names the failing
// inequality, e.g. "n >= 2k+t violated (n=5, 2k+t=6)".
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& msg)
      : std::invalid_argument(msg) {}
};

// Refusal to run a search or enumeration whose candidate space exceeds the
// configured guard.
class SizeGuardError : public std::runtime_error {
 public:
  explicit SizeGuardError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace crossint
