#pragma once

#include <complex>

namespace qsinc {

using Complex = std::complex<double>;

/// Controls truncation of infinite products and bilateral series.
///
/// `eps` bounds the neglected tail (relative to max(1, |partial value|) for
/// series, relative to the product itself for q-shifted factorials).
struct TruncationPolicy {
  double eps = 1e-15;
  long max_terms = 1'000'000;
  long min_terms = 4;

  void validate() const;
};

/// Value of a bilateral sum plus its truncation diagnostics.
struct SeriesEvaluation {
  Complex value{};
  long terms_used = 0;
  double tail_estimate = 0.0;
  bool converged = false;
};

bool is_finite(Complex z) noexcept;

}  // namespace qsinc
