#pragma once

#include <stdexcept>
#include <string>

namespace gengamma {

// Base class for all evaluation failures raised by this library.
class EvalError : public std::runtime_error {
 public:
  explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

// Argument within the configured threshold of a pole; the value would be
// meaningless so evaluation is refused.
class PoleProximityError : public EvalError {
 public:
  explicit PoleProximityError(const std::string& what) : EvalError(what) {}
};

// Argument outside the domain of the operation (invalid parameters,
// non-positive base, sequence constraint violated, ...).
class DomainError : public EvalError {
 public:
  explicit DomainError(const std::string& what) : EvalError(what) {}
};

class UnknownIdentityError : public EvalError {
 public:
  explicit UnknownIdentityError(const std::string& id)
      : EvalError("unknown identity: " + id) {}
};

class EmptyGridError : public EvalError {
 public:
  explicit EmptyGridError(const std::string& what) : EvalError(what) {}
};

} // namespace gengamma
