#include "qsinc/qcore.hpp"

#include <array>
#include <cmath>
#include <string>

#include "qsinc/error.hpp"

namespace qsinc {

namespace {

void check_base(Complex q) {
  if (!is_finite(q) || !(std::abs(q) < 1.0)) {
    fail(ErrorKind::InvalidBase, "|q| < 1 required");
  }
}

void check_nonzero_base(Complex q) {
  check_base(q);
  if (q == Complex{}) fail(ErrorKind::InvalidBase, "q != 0 required");
}

void track(ProductTrace& t, Complex factor) {
  const double m = std::abs(factor);
  if (t.min_factor_index < 0 || m < t.min_factor) {
    t.min_factor = m;
    t.min_factor_index = t.terms;
  }
}

// Multiplies (x; q)_inf into t.value, stopping once the tail bound certifies.
void certified_tail(Complex x, Complex q, const TruncationPolicy& policy, ProductTrace& t) {
  const double aq = std::abs(q);
  Complex term = x;
  for (long k = 0;; ++k) {
    const double m = std::abs(term);
    if (k >= policy.min_terms && m < 0.5 && 2.0 * m / (1.0 - aq) <= policy.eps) break;
    if (t.terms >= policy.max_terms) {
      fail(ErrorKind::NoConvergence,
           "q-shifted factorial needs more than " + std::to_string(policy.max_terms) +
               " factors");
    }
    const Complex f = 1.0 - term;
    track(t, f);
    t.value *= f;
    term *= q;
    ++t.terms;
  }
}

}  // namespace

Complex expm1(Complex w) noexcept {
  const double x = w.real();
  const double y = w.imag();
  if (y == 0.0) return {std::expm1(x), 0.0};
  const double s = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

bool is_vanishing_factor(Complex factor, Complex x) noexcept {
  return std::abs(factor) < kPoleTolerance * (1.0 + std::abs(x));
}

Complex qpoch_finite(Complex a, Complex q, long n) {
  if (n < 0) fail(ErrorKind::InvalidParams, "qpoch_finite requires n >= 0");
  Complex prod{1.0, 0.0};
  Complex term = a;
  for (long k = 0; k < n; ++k) {
    prod *= 1.0 - term;
    term *= q;
  }
  return prod;
}

Complex qpoch_inf(Complex a, Complex q, const TruncationPolicy& policy) {
  check_base(q);
  if (a == Complex{}) return {1.0, 0.0};
  ProductTrace t;
  t.value = 1.0;
  certified_tail(a, q, policy, t);
  return t.value;
}

ProductTrace qpoch_trace(Complex a, Complex q, const TruncationPolicy& policy) {
  check_base(q);
  ProductTrace t;
  t.value = 1.0;
  if (a == Complex{}) {
    t.min_factor = 1.0;
    return t;
  }
  Complex term = a;
  while (std::abs(term) >= 0.5) {
    if (t.terms >= policy.max_terms) {
      fail(ErrorKind::NoConvergence, "too many leading factors in (a; q)_inf");
    }
    const Complex f = 1.0 - term;
    track(t, f);
    t.value *= f;
    term *= q;
    ++t.terms;
  }
  certified_tail(term, q, policy, t);
  return t;
}

Complex qpoch_inf_large(Complex a, Complex q, const TruncationPolicy& policy) {
  return qpoch_trace(a, q, policy).value;
}

Complex qpow_ratio_product(std::span<const Complex> num_exponents,
                           std::span<const Complex> den_exponents, Complex q,
                           const TruncationPolicy& policy) {
  check_nonzero_base(q);
  const Complex log_q = std::log(q);
  const double aq = std::abs(q);
  Complex prod{1.0, 0.0};
  int num_zeros = 0;
  int den_zeros = 0;

  for (long k = 0;; ++k) {
    auto visit = [&](Complex s, bool numerator) {
      const Complex w = (s + static_cast<double>(k)) * log_q;
      const double mag = std::exp(w.real());
      const Complex f = -expm1(w);
      if (is_vanishing_factor(f, Complex{mag, 0.0})) {
        (numerator ? num_zeros : den_zeros) += 1;
        return;
      }
      if (numerator) {
        prod *= f;
      } else {
        prod /= f;
      }
    };
    if (k >= policy.min_terms) {
      double bound = 0.0;
      bool all_small = true;
      for (Complex s : num_exponents) {
        const double mag = std::exp(((s + static_cast<double>(k)) * log_q).real());
        bound += mag;
        all_small = all_small && mag < 0.5;
      }
      for (Complex s : den_exponents) {
        const double mag = std::exp(((s + static_cast<double>(k)) * log_q).real());
        bound += mag;
        all_small = all_small && mag < 0.5;
      }
      if (all_small && 2.0 * bound / (1.0 - aq) <= policy.eps) break;
    }
    if (k >= policy.max_terms) {
      fail(ErrorKind::NoConvergence, "q-power ratio product did not certify within " +
                                         std::to_string(policy.max_terms) + " factors");
    }
    for (Complex s : num_exponents) visit(s, true);
    for (Complex s : den_exponents) visit(s, false);
  }

  if (den_zeros > 0) {
    if (num_zeros > 0) {
      fail(ErrorKind::IndeterminateRatio, "numerator and denominator poles coincide");
    }
    fail(ErrorKind::PoleAtNonpositiveInteger, "Gamma_q argument is at a pole");
  }
  if (num_zeros > 0) return {0.0, 0.0};
  return prod;
}

Complex qgamma(Complex x, Complex q, const TruncationPolicy& policy) {
  check_nonzero_base(q);
  if (!is_finite(x)) fail(ErrorKind::InvalidParams, "x must be finite");
  const std::array<Complex, 1> num{Complex{1.0, 0.0}};
  const std::array<Complex, 1> den{x};
  const Complex ratio = qpow_ratio_product(num, den, q, policy);
  return ratio * std::exp((1.0 - x) * std::log(1.0 - q));
}

Complex qbinomial(Complex a, Complex b, Complex q, const TruncationPolicy& policy) {
  check_nonzero_base(q);
  if (!is_finite(a) || !is_finite(b)) fail(ErrorKind::InvalidParams, "a, b must be finite");
  const std::array<Complex, 2> num{b + 1.0, a - b + 1.0};
  const std::array<Complex, 2> den{Complex{1.0, 0.0}, a + 1.0};
  // The (1 - q) powers of the three Gamma_q factors cancel exactly.
  return qpow_ratio_product(num, den, q, policy);
}

Complex theta_product(Complex z, Complex q, const TruncationPolicy& policy) {
  check_nonzero_base(q);
  if (z == Complex{}) fail(ErrorKind::ZeroArgument, "theta_product requires z != 0");
  return qpoch_inf(q, q, policy) * qpoch_inf_large(-z, q, policy) *
         qpoch_inf_large(-q / z, q, policy);
}

}  // namespace qsinc
