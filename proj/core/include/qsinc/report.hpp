#pragma once

#include <map>
#include <string>
#include <string_view>

#include "qsinc/types.hpp"

namespace qsinc {

enum class IdentityId {
  Main,
  Symmetric,
  QBinomialForm,
  Osler,
  ClassicalSumInt,
  AppellLerch,
  Invariance,
  Fourier,
  WeightedM,
  Bailey,
  BaileyBinomial,
  Multibasic,
  FunctionalEq1,
  FunctionalEq2,
  BaseIntegral,
  TripleProduct,
  PoissonVanishing,
};

inline constexpr int kIdentityCount = 17;

/// Named parameters of one verification point. Real values carry a zero
/// imaginary part; integers are stored as integral reals.
using ParamRecord = std::map<std::string, Complex>;

enum class ReportStatus {
  Ok,             // both sides evaluated; `pass` carries the verdict
  InvalidParams,  // a hypothesis of the identity is violated
  Inconclusive,   // a truncation or quadrature failed to certify
};

std::string_view to_string(ReportStatus status) noexcept;

/// Work and error diagnostics for one side of an identity.
struct SideDiagnostics {
  long terms = 0;  // series terms or quadrature nodes
  double tail_estimate = 0.0;
  double error_estimate = 0.0;

  static SideDiagnostics from(const SeriesEvaluation& s) {
    return {s.terms_used, s.tail_estimate, 0.0};
  }
};

struct IdentityReport {
  IdentityId id = IdentityId::Main;
  ParamRecord params;
  Complex lhs{};
  Complex rhs{};
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tol = 0.0;
  bool pass = false;
  SideDiagnostics lhs_diag;
  SideDiagnostics rhs_diag;
  double elapsed_ms = 0.0;
  ReportStatus status = ReportStatus::Ok;
  std::string reason;
};

/// Fills the error fields and the verdict:
/// pass iff abs_err <= tol, or rel_err <= tol while max(|lhs|, |rhs|) > tol,
/// with rel_err = abs_err / max(|lhs|, |rhs|).
IdentityReport make_report(IdentityId id, ParamRecord params, Complex lhs, Complex rhs,
                           double tol, SideDiagnostics lhs_diag = {},
                           SideDiagnostics rhs_diag = {});

IdentityReport failed_report(IdentityId id, ParamRecord params, double tol,
                             ReportStatus status, std::string reason);

}  // namespace qsinc
