#include "qsinc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qsinc/error.hpp"
#include "qsinc/qcore.hpp"

namespace qsinc {

namespace {

constexpr int kMaxWidenings = 12;
constexpr double kWiden = 1.25;

// Series-side truncation for the pieces evaluated inside integrands.
constexpr TruncationPolicy kIntegrandPolicy{1e-16, 100'000, 4};

void require_unit_z(const SeriesParams& sp, const char* what) {
  if (sp.z != Complex{1.0, 0.0}) fail(ErrorKind::InvalidParams, std::string(what) + " needs z = 1");
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    fail(ErrorKind::InvalidParams, "half_width must be positive");
  }
  if (nodes_per_unit < 8) fail(ErrorKind::InvalidParams, "nodes_per_unit must be >= 8");
  if (max_refinements < 1) fail(ErrorKind::InvalidParams, "max_refinements must be >= 1");
  if (!(eps > 0.0) || !(eps < 1.0)) fail(ErrorKind::InvalidParams, "0 < eps < 1 required");
}

DecayModel DecayModel::from(const TailModel& model, double log_inv_q) {
  const double g = std::max(model.log_growth_pos, model.log_growth_neg);
  return {model.gauss / log_inv_q, std::exp(std::max(0.0, g)), log_inv_q};
}

QuadratureResult integrate_gaussian_decay(const RealIntegrand& f, const DecayModel& decay,
                                          const QuadratureSpec& spec, double density) {
  spec.validate();
  if (!(decay.c > 0.0) || !(decay.log_inv_q > 0.0)) {
    fail(ErrorKind::InvalidDecay, "integrand must decay like exp(-c L x^2) with c, L > 0");
  }
  const double r = std::max(1.0, decay.r);
  const double gauss = decay.c * decay.log_inv_q;
  double Z = std::max(spec.half_width,
                      static_cast<double>(model_cutoff(gauss, std::log(r), std::log(10.0 / spec.eps))));
  density = std::max(1.0, density);

  auto panels_for = [&](double width) {
    const double nodes = 2.0 * width * spec.nodes_per_unit * density;
    return std::max<long>(2, static_cast<long>(std::ceil(nodes / kPanelOrder)));
  };

  QuadratureResult out;
  long evaluations = 0;
  PanelSum coarse;
  double edge = 0.0;
  for (int w = 0;; ++w) {
    coarse = composite_gauss(f, -Z, Z, panels_for(Z));
    evaluations += coarse.evaluations + 2;
    edge = std::max(std::abs(f(-Z)), std::abs(f(Z)));
    if (!std::isfinite(edge) || !std::isfinite(std::abs(coarse.value))) {
      fail(ErrorKind::QuadratureFailure, "non-finite integrand value");
    }
    if (edge <= 0.1 * spec.eps * std::max(coarse.peak, std::abs(coarse.value))) break;
    if (w == kMaxWidenings) {
      fail(ErrorKind::QuadratureFailure, "integrand not negligible at |x| = " + std::to_string(Z));
    }
    Z *= kWiden;
  }

  const long panels = panels_for(Z);
  Complex previous = coarse.value;
  for (int k = 1; k <= spec.max_refinements; ++k) {
    const PanelSum fine = composite_gauss(f, -Z, Z, panels << k);
    evaluations += fine.evaluations;
    const double err = std::abs(fine.value - previous);
    out.value = fine.value;
    out.error_estimate = err + edge;
    out.refinements_used = k;
    previous = fine.value;
    if (err <= spec.eps * std::max(std::abs(fine.value), fine.l1)) {
      out.half_width_used = Z;
      out.nodes_used = evaluations;
      return out;
    }
  }
  fail(ErrorKind::QuadratureFailure,
       "refinement did not settle; last change " + std::to_string(out.error_estimate));
}

QuadratureResult base_integral(Complex q, const QuadratureSpec& spec) {
  if (!is_finite(q) || q == Complex{} || !(std::abs(q) < 1.0)) {
    fail(ErrorKind::InvalidBase, "0 < |q| < 1 required");
  }
  if (q.imag() != 0.0 && !spec.allow_continuation) {
    fail(ErrorKind::DomainError, "complex q needs the continuation flag");
  }
  if (q.imag() == 0.0 && q.real() < 0.0 && !spec.allow_continuation) {
    fail(ErrorKind::DomainError, "negative q needs the continuation flag");
  }
  const Complex log_q = std::log(q);
  const double L = -std::log(std::abs(q));
  auto f = [&](double x) {
    const Complex qx = std::exp(x * log_q);
    return 1.0 / (qpoch_inf_large(-qx, q, kIntegrandPolicy) *
                  qpoch_inf_large(-q / qx, q, kIntegrandPolicy));
  };
  QuadratureResult res = integrate_gaussian_decay(f, {0.5, std::exp(L), L}, spec);
  res.value *= -log_q;
  res.error_estimate *= std::abs(log_q);
  return res;
}

QuadratureResult symmetric_integral(const SeriesParams& sp, const QuadratureSpec& spec) {
  if (on_negative_real_axis(sp.z)) {
    fail(ErrorKind::InvalidParams, "z must not lie on the negative real axis");
  }
  const double L = sp.qp.log_inv_q();
  return integrate_gaussian_decay(
      [&](double x) { return symmetric_profile(sp, x, kIntegrandPolicy); },
      DecayModel::from(symmetric_tail_model(sp), L), spec);
}

QuadratureResult main_integral(const SeriesParams& sp, const QuadratureSpec& spec) {
  if (!(sp.z.real() > 0.0) && !spec.allow_continuation) {
    fail(ErrorKind::DomainError, "Re z > 0 required for the integral representation");
  }
  // With t = q^x the integrand becomes the z = 1 symmetric profile at (a z, b / z).
  const SeriesParams shifted = SeriesParams::make(sp.qp, sp.a * sp.z, sp.b / sp.z, 1.0);
  QuadratureResult res = symmetric_integral(shifted, spec);
  const Complex q = sp.qp.q();
  const Complex prefactor = qpoch_inf_large(-sp.z, q, kIntegrandPolicy) *
                            qpoch_inf_large(-q / sp.z, q, kIntegrandPolicy);
  res.value *= prefactor;
  res.error_estimate *= std::abs(prefactor);
  return res;
}

QuadratureResult fourier_integral(const SeriesParams& sp, double y, const QuadratureSpec& spec) {
  require_unit_z(sp, "Fourier integral");
  if (!std::isfinite(y)) fail(ErrorKind::InvalidParams, "y must be finite");
  const double L = sp.qp.log_inv_q();
  return integrate_gaussian_decay(
      [&](double x) { return symmetric_profile(sp, x, kIntegrandPolicy) * std::polar(1.0, x * y); },
      DecayModel::from(symmetric_tail_model(sp), L), spec,
      std::abs(y) / (2.0 * std::numbers::pi));
}

QuadratureResult weighted_integral(const SeriesParams& sp, int m, const QuadratureSpec& spec) {
  require_unit_z(sp, "weighted integral");
  const double L = sp.qp.log_inv_q();
  const Complex log_q = std::log(sp.qp.q());
  TailModel model = symmetric_tail_model(sp);
  model.log_growth_pos = std::max(0.0, model.log_growth_pos - m * L);
  model.log_growth_neg = std::max(0.0, model.log_growth_neg + m * L);
  return integrate_gaussian_decay(
      [&](double x) {
        return symmetric_profile(sp, x, kIntegrandPolicy) * std::exp(static_cast<double>(m) * x * log_q);
      },
      DecayModel::from(model, L), spec);
}

QuadratureResult multibasic_integral(const MultibasicParams& mp, const QuadratureSpec& spec) {
  if (on_negative_real_axis(mp.z)) {
    fail(ErrorKind::InvalidParams, "z must not lie on the negative real axis");
  }
  const double L = -std::log(mp.q);
  return integrate_gaussian_decay(
      [&](double x) { return multibasic_profile(mp, x, kIntegrandPolicy); },
      DecayModel::from(multibasic_tail_model(mp), L), spec);
}

}  // namespace qsinc
