#pragma once

#include <functional>
#include <vector>

#include "qsinc/types.hpp"

namespace qsinc {

using RealIntegrand = std::function<Complex(double)>;

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Rule of the given order, computed once by Newton iteration on P_n.
const GaussRule& gauss_legendre(int order);

inline constexpr int kPanelOrder = 10;

struct PanelSum {
  Complex value{};
  double l1 = 0.0;        // integral of |f|, the scale for error tests
  double peak = 0.0;      // largest |f| sampled
  long evaluations = 0;
};

/// Composite Gauss-Legendre over [lo, hi] split into `panels` equal panels.
/// Panels are accumulated left to right with compensated summation.
PanelSum composite_gauss(const RealIntegrand& f, double lo, double hi, long panels);

struct TanhSinhResult {
  Complex value{};
  double error_estimate = 0.0;
  long evaluations = 0;
  int levels = 0;
};

/// Tanh-sinh rule on [-1, 1]. The integrand receives (x, 1 - |x|) so it can
/// resolve endpoint singularities from the complement without cancellation.
TanhSinhResult tanh_sinh(const std::function<Complex(double, double)>& f, double tol,
                         long max_evaluations);

}  // namespace qsinc
