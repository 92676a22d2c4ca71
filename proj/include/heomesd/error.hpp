#pragma once

#include <stdexcept>
#include <string>

namespace heomesd {

enum class ErrorKind {
  Domain,              // invalid argument or parameter value
  SingularParameter,   // coefficient formula hits a pole
  Structural,          // inconsistent dimensions between state and model
  Divergence,          // non-finite values during integration
  Accuracy,            // monitored invariant drifted past tolerance
  NumericalDegradation,
  InsufficientData,
  InvalidState,        // density matrix fails validation
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace heomesd
