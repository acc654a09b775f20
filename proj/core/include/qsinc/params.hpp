#pragma once

#include <vector>

#include "qsinc/types.hpp"

namespace qsinc {

/// Base pair (p, q) with 0 < |p| < |q| < 1.
///
/// The decay exponent alpha = ln|q| / ln|p| and omega = -ln|p| are derived on
/// construction. By default |q| <= 0.95 and |p| <= 0.95 |q| are enforced as
/// well; pass `allow_extreme` to lift those guardrails.
class QParams {
 public:
  static constexpr double kGuardrail = 0.95;

  static QParams make(Complex p, Complex q, bool allow_extreme = false);

  Complex p() const noexcept { return p_; }
  Complex q() const noexcept { return q_; }
  double alpha() const noexcept { return alpha_; }
  double omega() const noexcept { return omega_; }
  /// ln(1/|q|), the Gaussian scale of every bilateral term.
  double log_inv_q() const noexcept { return alpha_ * omega_; }

 private:
  QParams(Complex p, Complex q);

  Complex p_;
  Complex q_;
  double alpha_;
  double omega_;
};

/// Parameters of the two-base series  sum (b q^n, a q^-n; p) z^n q^{n(n-1)/2}.
struct SeriesParams {
  QParams qp;
  Complex a;
  Complex b;
  Complex z;

  static SeriesParams make(const QParams& qp, Complex a, Complex b, Complex z);
};

struct BaileyParams {
  QParams qp;
  Complex a1, a2, b1, b2, z;

  static BaileyParams make(const QParams& qp, Complex a1, Complex a2, Complex b1,
                           Complex b2, Complex z);
};

/// One q-binomial profile [a; b + alpha x]_p inside a multibasic sum.
/// alpha is derived from the common base q through q = p^alpha.
struct BinomialFactor {
  double p;
  double a;
  double b;
  double alpha;
};

/// Several q-binomial profiles tied to a common base q = p_j^{alpha_j}, with
/// sum_j alpha_j < 1. Bases are real and in (0, 1) so the branch of p_j^x is
/// unambiguous.
struct MultibasicParams {
  std::vector<BinomialFactor> factors;
  double q;
  Complex z;

  struct FactorSpec {
    double p;
    double a;
    double b;
  };

  static MultibasicParams make(const std::vector<FactorSpec>& specs, double q, Complex z);
  static MultibasicParams make_two_base(double p1, double p2, double q, double a1,
                                        double b1, double a2, double b2, Complex z);
  /// The base q for which sum_j ln q / ln p_j equals `alpha_sum`.
  static double q_for_alpha_sum(const std::vector<double>& bases, double alpha_sum);

  double alpha_sum() const noexcept;
};

/// True when z lies on the closed negative real axis (denominator zeros of
/// (-z q^n; q)_inf accumulate there).
bool on_negative_real_axis(Complex z) noexcept;

}  // namespace qsinc
