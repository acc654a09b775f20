#include "qsinc/classical.hpp"

#include <math.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qsinc/error.hpp"
#include "qsinc/rules.hpp"
#include "qsinc/summation.hpp"

namespace qsinc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDirectLimit = 100.0;

bool is_nonpositive_integer(double s) { return s <= 0.0 && std::floor(s) == s; }

double log_gamma_positive(double s) {
  int sign = 1;
  return ::lgamma_r(s, &sign);
}

// 1 / Gamma(s), exact zero at the poles of Gamma.
double rgamma_direct(double s) {
  if (is_nonpositive_integer(s)) return 0.0;
  if (s >= 0.5) return 1.0 / std::tgamma(s);
  return sinpi(s) * std::tgamma(1.0 - s) / kPi;
}

struct LogMagnitude {
  double log_abs = 0.0;
  int sign = 1;
  bool zero = false;
};

LogMagnitude log_rgamma(double s) {
  if (is_nonpositive_integer(s)) return {0.0, 0, true};
  if (s >= 0.5) return {-log_gamma_positive(s), 1, false};
  const double sp = sinpi(s);
  if (sp == 0.0) return {0.0, 0, true};
  return {std::log(std::abs(sp)) + log_gamma_positive(1.0 - s) - std::log(kPi),
          sp > 0.0 ? 1 : -1, false};
}

LogMagnitude log_gamma(double s) {
  if (s >= 0.5) return {log_gamma_positive(s), 1, false};
  const LogMagnitude r = log_rgamma(s);
  return {-r.log_abs, r.sign, false};
}

void validate_osler(const OslerParams& p) { p.validate(); }

}  // namespace

double sinpi(double x) noexcept {
  double r = std::remainder(x, 2.0);  // exact, in [-1, 1]
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  return std::sin(kPi * r);
}

void OslerParams::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) fail(ErrorKind::InvalidParams, "0 < alpha <= 1 violated");
  if (!(std::abs(theta) < kPi)) fail(ErrorKind::InvalidParams, "|theta| < pi violated");
  if (!(a > 0.0)) fail(ErrorKind::InvalidParams, "a > 0 required for an absolute cutoff");
  if (!std::isfinite(b)) fail(ErrorKind::InvalidParams, "b must be finite");
}

double gamma_classical(double x) {
  if (std::isnan(x)) fail(ErrorKind::InvalidParams, "x is NaN");
  if (is_nonpositive_integer(x)) {
    fail(ErrorKind::PoleAtNonpositiveInteger, "Gamma has a pole at " + std::to_string(x));
  }
  return std::tgamma(x);
}

double binomial_real(double a, double u) {
  const double s0 = a + 1.0;
  const double s1 = u + 1.0;
  const double s2 = a - u + 1.0;
  const bool den_pole = is_nonpositive_integer(s1) || is_nonpositive_integer(s2);
  if (is_nonpositive_integer(s0)) {
    if (den_pole) fail(ErrorKind::IndeterminateRatio, "numerator and denominator poles coincide");
    fail(ErrorKind::PoleAtNonpositiveInteger, "Gamma(a+1) has a pole");
  }
  if (den_pole) return 0.0;

  if (std::abs(s0) < kDirectLimit && std::abs(s1) < kDirectLimit &&
      std::abs(s2) < kDirectLimit) {
    return std::tgamma(s0) * rgamma_direct(s1) * rgamma_direct(s2);
  }
  const LogMagnitude g0 = log_gamma(s0);
  const LogMagnitude r1 = log_rgamma(s1);
  const LogMagnitude r2 = log_rgamma(s2);
  if (r1.zero || r2.zero) return 0.0;
  return g0.sign * r1.sign * r2.sign * std::exp(g0.log_abs + r1.log_abs + r2.log_abs);
}

double binomial_envelope(double a, double u) {
  const double scale = std::abs(std::tgamma(a + 1.0)) / kPi;
  if (u > a + 1.0) {
    return scale * std::exp(log_gamma_positive(u - a) - log_gamma_positive(u + 1.0));
  }
  if (u < -1.0 && a - u + 1.0 > 0.0) {
    return scale * std::exp(log_gamma_positive(-u) - log_gamma_positive(a - u + 1.0));
  }
  return std::numeric_limits<double>::infinity();
}

Complex binomial_bandlimit_integral(double a, double u, int nodes) {
  if (!(a > -1.0)) fail(ErrorKind::InvalidParams, "a > -1 required for integrability");
  // For |t| < pi, 1 + e^{it} = 2 cos(t/2) e^{it/2}; with t = pi x the cosine
  // equals sin(pi (1 - |x|) / 2), which is accurate near the endpoints.
  const double freq = kPi * (0.5 * a - u);
  auto integrand = [&](double x, double complement) {
    const double c = 2.0 * std::sin(0.5 * kPi * complement);
    const double mag = std::pow(c, a);
    return Complex{mag * std::cos(freq * x), mag * std::sin(freq * x)};
  };
  const TanhSinhResult r = tanh_sinh(integrand, 1e-14, nodes);
  if (r.error_estimate > 1e-9) {
    fail(ErrorKind::QuadratureFailure,
         "band-limit integral error estimate " + std::to_string(r.error_estimate));
  }
  return 0.5 * r.value;
}

Complex osler_closed_form(const OslerParams& p) {
  validate_osler(p);
  // (1 + e^{i theta})^a = (2 cos(theta/2))^a e^{i a theta / 2} on |theta| < pi.
  const double mag = std::pow(2.0 * std::cos(0.5 * p.theta), p.a) / p.alpha;
  return std::polar(mag, 0.5 * p.a * p.theta);
}

SeriesEvaluation osler_sum(const OslerParams& p, const TruncationPolicy& policy) {
  validate_osler(p);
  policy.validate();
  auto term = [&](double u) { return binomial_real(p.a, u) * std::polar(1.0, p.theta * u); };

  CompensatedComplexSum sum;
  sum += term(p.b);
  Complex current = sum.value();
  Complex previous = current;
  double envelope = 0.0;
  int quiet = 0;
  long n = 1;
  for (;; ++n) {
    if (n > policy.max_terms) {
      fail(ErrorKind::SlowConvergence,
           "generalized binomial series not below cutoff after " +
               std::to_string(policy.max_terms) + " pairs");
    }
    const double up = p.b + p.alpha * static_cast<double>(n);
    const double down = p.b - p.alpha * static_cast<double>(n);
    previous = current;
    sum += term(up);
    sum += term(down);
    current = sum.value();
    envelope = std::max(binomial_envelope(p.a, up), binomial_envelope(p.a, down));
    const double threshold = policy.eps * std::max(1.0, std::abs(current));
    quiet = envelope < threshold ? quiet + 1 : 0;
    if (quiet >= 3 && n >= policy.min_terms) break;
  }

  SeriesEvaluation out;
  // One Euler step: the tail oscillates, so averaging the last two partial
  // sums cancels its leading part.
  out.value = p.a <= 2.0 ? 0.5 * (current + previous) : current;
  out.terms_used = 2 * n + 1;
  out.tail_estimate = 2.0 * envelope;
  out.converged = true;
  return out;
}

IdentityReport classical_sum_eq_integral(double a, double alpha, int l,
                                         const TruncationPolicy& policy, double tol) {
  if (!(a > 0.0)) fail(ErrorKind::InvalidParams, "a > 0 violated");
  if (l < 1) fail(ErrorKind::InvalidParams, "l >= 1 violated");
  if (!(alpha > 0.0) || alpha > (2.0 / l) * (1.0 + 1e-12)) {
    fail(ErrorKind::InvalidParams, "0 < alpha <= 2/l violated");
  }
  policy.validate();

  auto f = [&](double x) { return std::pow(binomial_real(a, alpha * x), l); };
  auto envelope = [&](double x) { return std::pow(binomial_envelope(a, alpha * x), l); };

  CompensatedSum sum;
  sum += f(0.0);
  double env = 0.0;
  int quiet = 0;
  long n = 1;
  for (;; ++n) {
    if (n > policy.max_terms) {
      fail(ErrorKind::SlowConvergence, "binomial power series did not reach its cutoff");
    }
    const double x = static_cast<double>(n);
    sum += f(x);
    sum += f(-x);
    env = std::max(envelope(x), envelope(-x));
    quiet = env < policy.eps * std::max(1.0, std::abs(sum.value())) ? quiet + 1 : 0;
    if (quiet >= 3 && n >= policy.min_terms) break;
  }
  const double series = sum.value();

  // The integral starts from the series cutoff and widens until the
  // analytic tail bound is well inside the tolerance. The profile is entire,
  // so composite Gauss converges quickly once a panel spans a fraction of a
  // period 2/alpha.
  auto tail_bound_at = [&](double x) {
    const double e = std::max(envelope(x), envelope(-x));
    // oscillatory bound for l = 1, power-law bound otherwise
    return l == 1 ? 2.0 * 2.0 * e / (kPi * alpha) : 2.0 * e * x / (l * (a + 1.0) - 1.0);
  };
  double radius = static_cast<double>(n);
  double tail_bound = tail_bound_at(radius);
  for (int widen = 0; widen < 24 && tail_bound > 0.01 * tol * std::max(1.0, std::abs(series));
       ++widen) {
    radius *= 1.5;
    tail_bound = tail_bound_at(radius);
  }
  const long panels =
      std::max<long>(16, static_cast<long>(std::ceil(2.0 * radius * 4.0 * alpha * l)));
  auto integrand = [&](double x) { return Complex{f(x), 0.0}; };
  const PanelSum coarse = composite_gauss(integrand, -radius, radius, panels);
  const PanelSum fine = composite_gauss(integrand, -radius, radius, 2 * panels);

  const double quad_err = std::abs(fine.value - coarse.value) + tail_bound;
  if (quad_err > 0.1 * tol * std::max(1.0, std::abs(fine.value))) {
    fail(ErrorKind::QuadratureFailure,
         "classical integral error estimate " + std::to_string(quad_err));
  }

  ParamRecord params{{"a", a}, {"alpha", alpha}, {"l", static_cast<double>(l)}};
  SideDiagnostics lhs{2 * n + 1, 2.0 * env, 0.0};
  SideDiagnostics rhs{coarse.evaluations + fine.evaluations, 0.0, quad_err};
  return make_report(IdentityId::ClassicalSumInt, std::move(params), series, fine.value, tol,
                     lhs, rhs);
}

}  // namespace qsinc
