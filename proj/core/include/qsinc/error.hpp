#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsinc {

enum class ErrorKind {
  InvalidBase,
  InvalidParams,
  NoConvergence,
  SlowConvergence,
  PoleAtNonpositiveInteger,
  IndeterminateRatio,
  ZeroArgument,
  DenominatorZero,
  LatticePole,
  KernelPole,
  DomainError,
  QuadratureFailure,
  InvalidDecay,
  InvalidGrid,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Parameter-side failures (the inputs violate a hypothesis or hit a pole)
// versus numerical ones (a truncation or quadrature did not certify).
bool is_parameter_error(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace qsinc
