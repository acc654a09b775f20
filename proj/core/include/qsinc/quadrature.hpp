#pragma once

#include "qsinc/bilateral.hpp"
#include "qsinc/params.hpp"
#include "qsinc/rules.hpp"
#include "qsinc/types.hpp"

namespace qsinc {

struct QuadratureSpec {
  double half_width = 4.0;  // minimum truncation radius; the decay model may widen it
  int nodes_per_unit = 16;
  int max_refinements = 8;
  double eps = 1e-12;
  bool allow_continuation = false;  // complex q for base_integral, Re z <= 0 for main_integral

  void validate() const;
};

struct QuadratureResult {
  Complex value{};
  double error_estimate = 0.0;
  double half_width_used = 0.0;
  int refinements_used = 0;
  long nodes_used = 0;
};

/// |f(x)| = O(r^{|x|} exp(-c L x^2)) with L = log_inv_q.
struct DecayModel {
  double c;
  double r;
  double log_inv_q = 1.0;

  static DecayModel from(const TailModel& model, double log_inv_q);
};

/// Integral of f over the real line. The domain is cut at the radius where the
/// decay model falls below eps / 10 (times 1.25), widened further while the
/// integrand at the cut is not negligible, and integrated by composite
/// Gauss-Legendre with panel doubling until two levels agree to
/// eps * max(|I|, int |f|). `density` multiplies the node count (oscillatory f).
QuadratureResult integrate_gaussian_decay(const RealIntegrand& f, const DecayModel& decay,
                                          const QuadratureSpec& spec = {},
                                          double density = 1.0);

/// int_0^inf dt / (t (-t, -q/t; q)_inf), integrated in x with t = q^x.
QuadratureResult base_integral(Complex q, const QuadratureSpec& spec = {});

/// (-z, -q/z; q)_inf / ln(1/q) int_0^inf (b t / z, a z / t; p)_inf / (-t, -q/t; q)_inf dt / t.
QuadratureResult main_integral(const SeriesParams& params, const QuadratureSpec& spec = {});

/// int (b q^x, a q^-x; p)_inf / (-z q^x, -q^{1-x}/z; q)_inf dx.
QuadratureResult symmetric_integral(const SeriesParams& params,
                                    const QuadratureSpec& spec = {});

/// int g(x) e^{ixy} dx with g the z = 1 symmetric profile.
QuadratureResult fourier_integral(const SeriesParams& params, double y,
                                  const QuadratureSpec& spec = {});

/// int g(x) q^{mx} dx with g the z = 1 symmetric profile.
QuadratureResult weighted_integral(const SeriesParams& params, int m,
                                   const QuadratureSpec& spec = {});

/// int prod_j [a_j; b_j + alpha_j x]_{p_j} / (-z q^x, -q^{1-x}/z; q)_inf dx.
QuadratureResult multibasic_integral(const MultibasicParams& params,
                                     const QuadratureSpec& spec = {});

}  // namespace qsinc
