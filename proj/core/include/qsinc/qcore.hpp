#pragma once

#include <span>

#include "qsinc/types.hpp"

namespace qsinc {

/// (a; q)_n = prod_{k<n} (1 - a q^k). Empty product for n = 0.
Complex qpoch_finite(Complex a, Complex q, long n);

/// (a; q)_inf truncated once the certified tail bound
/// 2 |a| |q|^N / (1 - |q|) (valid after |a| |q|^N < 1/2) drops below eps.
Complex qpoch_inf(Complex a, Complex q, const TruncationPolicy& policy = {});

/// (a; q)_inf for arbitrary |a|: peels the leading factors until
/// |a q^M| < 1/2, then hands the remainder to qpoch_inf.
Complex qpoch_inf_large(Complex a, Complex q, const TruncationPolicy& policy = {});

struct ProductTrace {
  Complex value{};
  double min_factor = 0.0;  // smallest |1 - a q^k| seen
  long min_factor_index = -1;
  long terms = 0;
};

/// qpoch_inf_large that also reports the smallest factor, for pole checks.
ProductTrace qpoch_trace(Complex a, Complex q, const TruncationPolicy& policy = {});

/// A factor 1 - x counts as vanishing when |1 - x| < 1e-13 (1 + |x|).
bool is_vanishing_factor(Complex factor, Complex x) noexcept;
inline constexpr double kPoleTolerance = 1e-13;

/// Gamma_q(x) = (q;q)_inf / (q^x;q)_inf (1-q)^{1-x}, principal branches.
/// Evaluated as a product of ratios so it stays finite as q -> 1.
Complex qgamma(Complex x, Complex q, const TruncationPolicy& policy = {});

/// [a; b]_q = Gamma_q(a+1) / (Gamma_q(b+1) Gamma_q(a-b+1)).
/// Zero when a denominator Gamma_q has a pole.
Complex qbinomial(Complex a, Complex b, Complex q, const TruncationPolicy& policy = {});

/// (q, -z, -q/z; q)_inf, the product side of the Jacobi triple product.
Complex theta_product(Complex z, Complex q, const TruncationPolicy& policy = {});

/// prod_{k>=0} prod_i (1 - q^{num_i + k}) / prod_j (1 - q^{den_j + k}), each
/// factor formed as -expm1((s + k) Log q). Used by qgamma and qbinomial.
/// Throws PoleAtNonpositiveInteger if only denominator factors vanish,
/// IndeterminateRatio if both do, and returns 0 if only numerator factors do.
Complex qpow_ratio_product(std::span<const Complex> num_exponents,
                           std::span<const Complex> den_exponents, Complex q,
                           const TruncationPolicy& policy = {});

/// exp(w) - 1 without cancellation for small |w|.
Complex expm1(Complex w) noexcept;

}  // namespace qsinc
