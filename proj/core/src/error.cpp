#include "qsinc/error.hpp"

namespace qsinc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidBase: return "InvalidBase";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::SlowConvergence: return "SlowConvergence";
    case ErrorKind::PoleAtNonpositiveInteger: return "PoleAtNonpositiveInteger";
    case ErrorKind::IndeterminateRatio: return "IndeterminateRatio";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::DenominatorZero: return "DenominatorZero";
    case ErrorKind::LatticePole: return "LatticePole";
    case ErrorKind::KernelPole: return "KernelPole";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::InvalidDecay: return "InvalidDecay";
    case ErrorKind::InvalidGrid: return "InvalidGrid";
  }
  return "Unknown";
}

bool is_parameter_error(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NoConvergence:
    case ErrorKind::SlowConvergence:
    case ErrorKind::QuadratureFailure:
    case ErrorKind::InvalidDecay:
      return false;
    default:
      return true;
  }
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace qsinc
