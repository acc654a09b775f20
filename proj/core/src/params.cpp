#include "qsinc/params.hpp"

#include <cmath>
#include <string>

#include "qsinc/error.hpp"

namespace qsinc {

bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void TruncationPolicy::validate() const {
  if (!(eps > 0.0 && eps < 1.0)) {
    fail(ErrorKind::InvalidParams, "truncation eps must lie in (0, 1)");
  }
  if (min_terms < 4) fail(ErrorKind::InvalidParams, "min_terms must be >= 4");
  if (max_terms < min_terms) {
    fail(ErrorKind::InvalidParams, "max_terms must be >= min_terms");
  }
}

QParams::QParams(Complex p, Complex q) : p_(p), q_(q) {
  omega_ = -std::log(std::abs(p));
  alpha_ = std::log(std::abs(q)) / std::log(std::abs(p));
}

QParams QParams::make(Complex p, Complex q, bool allow_extreme) {
  if (!is_finite(p) || !is_finite(q)) {
    fail(ErrorKind::InvalidParams, "p and q must be finite");
  }
  const double ap = std::abs(p);
  const double aq = std::abs(q);
  if (!(ap > 0.0)) fail(ErrorKind::InvalidParams, "0 < |p| violated");
  if (!(aq < 1.0)) fail(ErrorKind::InvalidParams, "|q| < 1 violated");
  if (!(ap < aq)) fail(ErrorKind::InvalidParams, "|p| < |q| violated");
  if (!allow_extreme) {
    if (aq > kGuardrail) {
      fail(ErrorKind::InvalidParams, "|q| <= 0.95 guardrail violated (set override to lift)");
    }
    if (ap > kGuardrail * aq) {
      fail(ErrorKind::InvalidParams,
           "|p| <= 0.95 |q| guardrail violated (set override to lift)");
    }
  }
  return QParams(p, q);
}

SeriesParams SeriesParams::make(const QParams& qp, Complex a, Complex b, Complex z) {
  if (!is_finite(a) || !is_finite(b) || !is_finite(z)) {
    fail(ErrorKind::InvalidParams, "a, b and z must be finite");
  }
  if (z == Complex{}) fail(ErrorKind::InvalidParams, "z != 0 violated");
  return SeriesParams{qp, a, b, z};
}

BaileyParams BaileyParams::make(const QParams& qp, Complex a1, Complex a2, Complex b1,
                                Complex b2, Complex z) {
  for (Complex v : {a1, a2, b1, b2, z}) {
    if (!is_finite(v)) fail(ErrorKind::InvalidParams, "parameters must be finite");
  }
  if (z == Complex{}) fail(ErrorKind::InvalidParams, "z != 0 violated");
  return BaileyParams{qp, a1, a2, b1, b2, z};
}

MultibasicParams MultibasicParams::make(const std::vector<FactorSpec>& specs, double q,
                                        Complex z) {
  if (specs.empty()) fail(ErrorKind::InvalidParams, "at least one base is required");
  if (!(q > 0.0 && q < 1.0)) fail(ErrorKind::InvalidParams, "0 < q < 1 violated");
  if (!is_finite(z) || z == Complex{}) fail(ErrorKind::InvalidParams, "z != 0 violated");
  MultibasicParams out{{}, q, z};
  double sum = 0.0;
  for (const auto& s : specs) {
    if (!(s.p > 0.0 && s.p < 1.0)) fail(ErrorKind::InvalidParams, "0 < p_j < 1 violated");
    if (!std::isfinite(s.a) || !std::isfinite(s.b)) {
      fail(ErrorKind::InvalidParams, "a_j and b_j must be finite");
    }
    const double alpha = std::log(q) / std::log(s.p);
    if (!(alpha > 0.0)) fail(ErrorKind::InvalidParams, "alpha_j > 0 violated");
    sum += alpha;
    out.factors.push_back({s.p, s.a, s.b, alpha});
  }
  if (!(sum < 1.0)) {
    fail(ErrorKind::InvalidParams,
         "sum of alpha_j < 1 violated (got " + std::to_string(sum) + ")");
  }
  return out;
}

MultibasicParams MultibasicParams::make_two_base(double p1, double p2, double q, double a1,
                                                 double b1, double a2, double b2,
                                                 Complex z) {
  return make({{p1, a1, b1}, {p2, a2, b2}}, q, z);
}

double MultibasicParams::q_for_alpha_sum(const std::vector<double>& bases,
                                         double alpha_sum) {
  if (!(alpha_sum > 0.0)) fail(ErrorKind::InvalidParams, "alpha sum must be positive");
  double inv = 0.0;
  for (double p : bases) {
    if (!(p > 0.0 && p < 1.0)) fail(ErrorKind::InvalidParams, "0 < p_j < 1 violated");
    inv += 1.0 / std::log(p);
  }
  return std::exp(alpha_sum / inv);
}

double MultibasicParams::alpha_sum() const noexcept {
  double s = 0.0;
  for (const auto& f : factors) s += f.alpha;
  return s;
}

bool on_negative_real_axis(Complex z) noexcept {
  return z.imag() == 0.0 && z.real() <= 0.0;
}

}  // namespace qsinc
