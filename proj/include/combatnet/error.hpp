#pragma once

#include <stdexcept>
#include <string>

namespace combatnet {

// Base of every error raised by the library. `exit_code()` is the process
// status the CLI reports for it.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 1; }
};

// Invalid arguments, malformed files, mismatched dimensions.
class ParameterError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

// No attack set satisfies both the cardinality and the budget.
class InfeasibleError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

// The unattacked network has no kill chains (S_links = 0), so the damage
// ratio is undefined.
class DegenerateNetworkError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 4; }
};

// A randomized generator gave up after its draw cap.
class GenerationError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

}  // namespace detail
}  // namespace combatnet
