#pragma once

#include "qsinc/report.hpp"
#include "qsinc/types.hpp"

namespace qsinc {

/// Default truncation for the algebraically decaying classical series.
inline constexpr TruncationPolicy kClassicalPolicy{1e-10, 2'000'000, 4};

/// Parameters of sum_n binom(a, b + alpha n) v^{b + alpha n} with v = e^{i theta}.
struct OslerParams {
  double a;
  double b;
  double alpha;
  double theta;

  /// 0 < alpha <= 1, |theta| < pi, a > 0 (absolute cutoff needs decaying terms).
  void validate() const;
};

/// Classical Gamma; throws PoleAtNonpositiveInteger at 0, -1, -2, ...
double gamma_classical(double x);

/// sin(pi x) with exact zeros at the integers.
double sinpi(double x) noexcept;

/// Gamma(a+1) / (Gamma(u+1) Gamma(a-u+1)) for real order. Reciprocal Gammas
/// at negative arguments go through the reflection formula, so a pole in one
/// denominator Gamma yields an exact 0.
double binomial_real(double a, double u);

/// |binom(a, u)| with the oscillating sine of the reflection formula replaced
/// by 1. Only meaningful for u > a + 1 or u < -1; returns +inf in between.
double binomial_envelope(double a, double u);

/// (1 / 2 pi) int_{-pi}^{pi} (1 + e^{it})^a e^{-iut} dt by tanh-sinh.
Complex binomial_bandlimit_integral(double a, double u, int nodes = 4096);

/// Symmetric partial sums of the generalized binomial series, cut when the
/// term envelope stays below eps * max(1, |S|) for three consecutive n.
SeriesEvaluation osler_sum(const OslerParams& params,
                           const TruncationPolicy& policy = kClassicalPolicy);

/// (1 / alpha) (1 + e^{i theta})^a.
Complex osler_closed_form(const OslerParams& params);

/// S = sum_n binom(a, alpha n)^l versus I = int binom(a, alpha x)^l dx.
/// Requires a > 0, l >= 1 and 0 < alpha <= 2 / l.
IdentityReport classical_sum_eq_integral(double a, double alpha, int l,
                                         const TruncationPolicy& policy = kClassicalPolicy,
                                         double tol = 1e-6);

}  // namespace qsinc
