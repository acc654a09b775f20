#include "qsinc/bilateral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qsinc/error.hpp"
#include "qsinc/qcore.hpp"
#include "qsinc/summation.hpp"

namespace qsinc {

namespace {

constexpr double kSafety = 1.25;

Complex ipow(Complex base, long n) {
  if (n < 0) return 1.0 / ipow(base, -n);
  Complex result{1.0, 0.0};
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

double safe_log(double x) {
  return x > 0.0 ? std::log(x) : -std::numeric_limits<double>::infinity();
}

double clamp_growth(double g) { return std::isfinite(g) ? std::max(0.0, g) : 0.0; }

// q^{n(n-1)/2} z^n times a product, falling back to logarithms when the
// power underflows or the product overflows.
Complex gaussian_weighted(Complex product, Complex z, Complex q, long n, long two_k) {
  // two_k selects the weight q^{n(n-1)/2} (two_k = 1) or q^{n(n-1)} (two_k = 2).
  const long n2 = n * (n - 1) / 2 * two_k;
  const Complex direct = product * ipow(z, n) * ipow(q, n2);
  if (is_finite(direct) && (direct != Complex{} || product == Complex{})) return direct;
  if (product == Complex{}) return {};
  const Complex log_term = std::log(product) + static_cast<double>(n) * std::log(z) +
                           static_cast<double>(n2) * std::log(q);
  return std::exp(log_term);
}

Complex checked_denominator(Complex x, Complex q, const TruncationPolicy& policy) {
  const ProductTrace t = qpoch_trace(x, q, policy);
  if (t.min_factor < 2.0 * kPoleTolerance) {
    fail(ErrorKind::DenominatorZero,
         "factor " + std::to_string(t.min_factor_index) + " of (-z q^n; q)_inf vanishes");
  }
  return t.value;
}

// (b qx, a / qx; p) / (-z qx, -q / (z qx); q) with qx = q^x.
Complex symmetric_from_power(const SeriesParams& sp, Complex qx,
                             const TruncationPolicy& policy) {
  const Complex p = sp.qp.p();
  const Complex q = sp.qp.q();
  const Complex num_small = qpoch_inf_large(sp.b * qx, p, policy);
  const Complex num_large = qpoch_inf_large(sp.a / qx, p, policy);
  const Complex den_small = checked_denominator(-sp.z * qx, q, policy);
  const Complex den_large = checked_denominator(-q / (sp.z * qx), q, policy);
  return (num_small / den_small) * (num_large / den_large);
}

void require_symmetric_domain(const SeriesParams& sp) {
  if (on_negative_real_axis(sp.z)) {
    fail(ErrorKind::InvalidParams, "z must not lie on the negative real axis");
  }
}

SeriesEvaluation scaled(SeriesEvaluation s, Complex factor) {
  s.value *= factor;
  s.tail_estimate *= std::abs(factor);
  return s;
}

// (x; base)_inf with factor `skip` left out.
Complex qpoch_skip(Complex x, Complex base, long skip, const TruncationPolicy& policy) {
  const double ab = std::abs(base);
  Complex prod{1.0, 0.0};
  Complex term = x;
  for (long k = 0;; ++k) {
    const double m = std::abs(term);
    if (k > skip && k >= policy.min_terms && m < 0.5 && 2.0 * m / (1.0 - ab) <= policy.eps) {
      break;
    }
    if (k >= policy.max_terms) fail(ErrorKind::NoConvergence, "(x; q^2)_inf did not certify");
    if (k != skip) prod *= 1.0 - term;
    term *= base;
  }
  return prod;
}

}  // namespace

long model_cutoff(double gauss, double log_growth, double delta) {
  if (!(gauss > 0.0)) fail(ErrorKind::InvalidDecay, "Gaussian decay rate must be positive");
  const double g = clamp_growth(log_growth);
  const double n = (g + std::sqrt(g * g + 4.0 * gauss * delta)) / (2.0 * gauss);
  return static_cast<long>(std::ceil(kSafety * n));
}

SeriesEvaluation sum_bilateral(const std::function<Complex(long)>& term,
                               const TailModel& model, const TruncationPolicy& policy) {
  policy.validate();
  const double delta = -std::log(policy.eps);
  const long cut_pos = model_cutoff(model.gauss, model.log_growth_pos, delta);
  const long cut_neg = model_cutoff(model.gauss, model.log_growth_neg, delta);

  struct Direction {
    long sign;
    long cutoff;
    bool active = true;
    int quiet = 0;
    double last = 0.0;
    double before_last = 0.0;
  };
  Direction dirs[2] = {{+1, cut_pos}, {-1, cut_neg}};

  CompensatedComplexSum sum;
  const Complex t0 = term(0);
  if (!is_finite(t0)) fail(ErrorKind::NoConvergence, "non-finite central term");
  sum += t0;
  long terms = 1;

  for (long n = 1; dirs[0].active || dirs[1].active; ++n) {
    if (n > policy.max_terms) {
      fail(ErrorKind::NoConvergence, "bilateral series needs more than " +
                                         std::to_string(policy.max_terms) + " terms per side");
    }
    for (Direction& d : dirs) {
      if (!d.active) continue;
      const Complex t = term(d.sign * n);
      if (!is_finite(t)) {
        fail(ErrorKind::NoConvergence, "non-finite term at n = " + std::to_string(d.sign * n));
      }
      sum += t;
      ++terms;
      d.before_last = d.last;
      d.last = std::abs(t);
      const double threshold = policy.eps * std::max(1.0, std::abs(sum.value()));
      d.quiet = d.last < threshold ? d.quiet + 1 : 0;
      if (n >= d.cutoff && n >= policy.min_terms && d.quiet >= 3) d.active = false;
    }
  }

  SeriesEvaluation out;
  out.value = sum.value();
  out.terms_used = terms;
  for (const Direction& d : dirs) {
    if (d.last == 0.0) continue;
    const double ratio = d.before_last > 0.0 ? d.last / d.before_last : 1.0;
    out.tail_estimate += ratio < 1.0 ? d.last * ratio / (1.0 - ratio) : 3.0 * d.last;
  }
  out.converged = out.tail_estimate <= policy.eps * std::max(1.0, std::abs(out.value));
  return out;
}

SeriesEvaluation theta_series(Complex z, Complex q, const TruncationPolicy& policy) {
  if (!is_finite(q) || !(std::abs(q) < 1.0) || q == Complex{}) {
    fail(ErrorKind::InvalidBase, "0 < |q| < 1 required");
  }
  if (z == Complex{}) fail(ErrorKind::ZeroArgument, "z != 0 required");
  const double L = -std::log(std::abs(q));
  const double lz = std::log(std::abs(z));
  const TailModel model{0.5 * L, lz + 0.5 * L, -lz - 0.5 * L};
  return sum_bilateral(
      [&](long n) { return gaussian_weighted(Complex{1.0, 0.0}, z, q, n, 1); }, model, policy);
}

SeriesEvaluation main_series(const SeriesParams& sp, const TruncationPolicy& policy) {
  const Complex p = sp.qp.p();
  const Complex q = sp.qp.q();
  const double alpha = sp.qp.alpha();
  const double L = sp.qp.log_inv_q();
  const double lz = std::log(std::abs(sp.z));
  const TailModel model{0.5 * (1.0 - alpha) * L,
                        lz + alpha * safe_log(std::abs(sp.a)) + L,
                        alpha * safe_log(std::abs(sp.b)) - lz};
  auto term = [&](long n) {
    const Complex qn = ipow(q, n);
    const Complex prod = qpoch_inf_large(sp.b * qn, p, policy) *
                         qpoch_inf_large(sp.a / qn, p, policy);
    return gaussian_weighted(prod, sp.z, q, n, 1);
  };
  return sum_bilateral(term, model, policy);
}

TailModel symmetric_tail_model(const SeriesParams& sp) {
  const double alpha = sp.qp.alpha();
  const double L = sp.qp.log_inv_q();
  const double lz = std::log(std::abs(sp.z));
  return {0.5 * (1.0 - alpha) * L, clamp_growth(lz + alpha * safe_log(std::abs(sp.a)) + L),
          clamp_growth(alpha * safe_log(std::abs(sp.b)) - lz)};
}

Complex symmetric_profile(const SeriesParams& sp, double x, const TruncationPolicy& policy) {
  const Complex qx = std::exp(x * std::log(sp.qp.q()));
  return symmetric_from_power(sp, qx, policy);
}

SeriesEvaluation symmetric_series(const SeriesParams& sp, const TruncationPolicy& policy) {
  require_symmetric_domain(sp);
  const Complex q = sp.qp.q();
  return sum_bilateral(
      [&](long n) { return symmetric_from_power(sp, ipow(q, n), policy); },
      symmetric_tail_model(sp), policy);
}

SeriesEvaluation bailey_series(const BaileyParams& bp, BaileySide side,
                               const TruncationPolicy& policy) {
  const Complex p = bp.qp.p();
  const Complex q = bp.qp.q();
  const double alpha = bp.qp.alpha();
  const double L = bp.qp.log_inv_q();

  // The right side is the left side at (a z, b / z, 1 / z), times z.
  const Complex shift = side == BaileySide::Left ? Complex{1.0, 0.0} : bp.z;
  const Complex z = side == BaileySide::Left ? bp.z : 1.0 / bp.z;
  const Complex a1 = bp.a1 * shift;
  const Complex a2 = bp.a2 * shift;
  const Complex b1 = bp.b1 / shift;
  const Complex b2 = bp.b2 / shift;

  const double lz = std::log(std::abs(z));
  const TailModel model{(1.0 - alpha) * L,
                        lz + alpha * safe_log(std::abs(a1 * a2)) + 2.0 * L,
                        alpha * safe_log(std::abs(b1 * b2)) - lz};
  auto term = [&](long n) {
    const Complex qn = ipow(q, n);
    const Complex prod =
        (qpoch_inf_large(b1 * qn, p, policy) * qpoch_inf_large(a1 / qn, p, policy)) *
        (qpoch_inf_large(b2 * qn, p, policy) * qpoch_inf_large(a2 / qn, p, policy));
    return gaussian_weighted(prod, z, q, n, 2);
  };
  SeriesEvaluation s = sum_bilateral(term, model, policy);
  return side == BaileySide::Left ? s : scaled(s, bp.z);
}

SeriesEvaluation appell_lerch_rhs(Complex a, Complex q, const TruncationPolicy& policy,
                                  PoleHandling poles) {
  if (!is_finite(q) || !(std::abs(q) < 1.0) || q == Complex{}) {
    fail(ErrorKind::InvalidBase, "0 < |q| < 1 required");
  }
  if (!is_finite(a) || a == Complex{}) fail(ErrorKind::InvalidParams, "a != 0 required");
  const Complex q2 = q * q;
  const Complex x1 = q * a;
  const Complex x2 = q / a;
  const double L = -std::log(std::abs(q));
  const double la = std::log(std::abs(a));
  const TailModel model{L, -(L + la), L + la};

  // Every lattice point a q^{2n+1} = 1 is also a zero of (qa, q/a; q^2)_inf:
  // for n >= 0 the factor 1 - a q^{2n+1} of (qa; q^2) equals the denominator,
  // for n = -k-1 the factor 1 - q^{2k+1}/a equals -(q^{2k+1}/a) times it.
  Complex full1{}, full2{};
  if (poles == PoleHandling::Reject) {
    full1 = qpoch_inf_large(x1, q2, policy);
    full2 = qpoch_inf_large(x2, q2, policy);
  }
  auto term = [&](long n) {
    Complex bracket;
    if (poles == PoleHandling::Reject) {
      const Complex den = 1.0 - a * ipow(q, 2 * n + 1);
      if (std::abs(den) < kPoleTolerance) {
        fail(ErrorKind::LatticePole, "a q^{2n+1} = 1 at n = " + std::to_string(n));
      }
      bracket = full1 * full2 / den;
    } else if (n >= 0) {
      bracket = qpoch_skip(x1, q2, n, policy) * qpoch_skip(x2, q2, -1, policy);
    } else {
      const long k = -n - 1;
      bracket = qpoch_skip(x1, q2, -1, policy) * qpoch_skip(x2, q2, k, policy) *
                (-ipow(q, 2 * k + 1) / a);
    }
    return ipow(-1.0 / a, n) * ipow(q, n * n + n) * bracket;
  };
  return scaled(sum_bilateral(term, model, policy), 2.0);
}

SeriesEvaluation fourier_series_side(const SeriesParams& sp, double y,
                                     const TruncationPolicy& policy) {
  if (sp.z != Complex{1.0, 0.0}) fail(ErrorKind::InvalidParams, "Fourier identity needs z = 1");
  if (y == 0.0) {
    fail(ErrorKind::KernelPole, "sinh kernel is singular at y = 0; use the weighted series");
  }
  const Complex q = sp.qp.q();
  const Complex log_q = std::log(q);
  const Complex i{0.0, 1.0};
  const Complex sh = std::sinh(std::numbers::pi * y / log_q);
  if (std::abs(sh) < kPoleTolerance) fail(ErrorKind::KernelPole, "sinh(pi y / ln q) = 0");
  const Complex kernel = (2.0 * std::numbers::pi * i / log_q) / sh;

  const Complex e = std::polar(1.0, y);
  const Complex neg_q = qpoch_inf(-q, q, policy);
  const Complex q_q = qpoch_inf(q, q, policy);
  const Complex num = neg_q * neg_q * qpoch_inf(e, q, policy) * qpoch_inf(q / e, q, policy);
  const ProductTrace d1 = qpoch_trace(-e, q, policy);
  const ProductTrace d2 = qpoch_trace(-q / e, q, policy);
  if (d1.min_factor < 2.0 * kPoleTolerance || d2.min_factor < 2.0 * kPoleTolerance) {
    fail(ErrorKind::KernelPole, "(-e^{iy}, -q e^{-iy}; q)_inf vanishes (y = pi mod 2 pi)");
  }
  const Complex prefactor = kernel * num / (q_q * q_q * d1.value * d2.value);

  auto term = [&](long n) {
    return symmetric_from_power(sp, ipow(q, n), policy) *
           std::polar(1.0, y * static_cast<double>(n));
  };
  return scaled(sum_bilateral(term, symmetric_tail_model(sp), policy), prefactor);
}

SeriesEvaluation weighted_series(const SeriesParams& sp, int m,
                                 const TruncationPolicy& policy) {
  if (sp.z != Complex{1.0, 0.0}) fail(ErrorKind::InvalidParams, "weighted series needs z = 1");
  const Complex q = sp.qp.q();
  TailModel model = symmetric_tail_model(sp);
  const double L = sp.qp.log_inv_q();
  model.log_growth_pos = clamp_growth(model.log_growth_pos - m * L);
  model.log_growth_neg = clamp_growth(model.log_growth_neg + m * L);
  auto term = [&](long n) {
    const Complex qn = ipow(q, n);
    return symmetric_from_power(sp, qn, policy) * ipow(qn, m);
  };
  return sum_bilateral(term, model, policy);
}

TailModel multibasic_tail_model(const MultibasicParams& mp) {
  const double L = -std::log(mp.q);
  const double lz = std::log(std::abs(mp.z));
  double pos = lz + L;
  double neg = -lz;
  for (const auto& f : mp.factors) {
    const double lp = std::log(f.p);
    pos += f.alpha * (f.a - f.b + 1.0) * lp;
    neg += f.alpha * (f.b + 1.0) * lp;
  }
  return {0.5 * (1.0 - mp.alpha_sum()) * L, clamp_growth(pos), clamp_growth(neg)};
}

Complex multibasic_profile(const MultibasicParams& mp, double x,
                           const TruncationPolicy& policy) {
  Complex value{1.0, 0.0};
  for (const auto& f : mp.factors) {
    value *= qbinomial(f.a, f.b + f.alpha * x, f.p, policy);
  }
  const Complex qx = std::exp(x * std::log(mp.q));
  const Complex den = checked_denominator(-mp.z * qx, mp.q, policy) *
                      checked_denominator(-mp.q / (mp.z * qx), mp.q, policy);
  return value / den;
}

SeriesEvaluation multibasic_series(const MultibasicParams& mp,
                                   const TruncationPolicy& policy) {
  if (on_negative_real_axis(mp.z)) {
    fail(ErrorKind::InvalidParams, "z must not lie on the negative real axis");
  }
  return sum_bilateral(
      [&](long n) { return multibasic_profile(mp, static_cast<double>(n), policy); },
      multibasic_tail_model(mp), policy);
}

}  // namespace qsinc
