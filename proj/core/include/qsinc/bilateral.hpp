#pragma once

#include <functional>

#include "qsinc/params.hpp"
#include "qsinc/types.hpp"

namespace qsinc {

/// Asymptotic model of a bilateral term: ln|t_n| ~ -gauss n^2 + log_growth |n|,
/// with separate growth rates for n -> +inf and n -> -inf.
struct TailModel {
  double gauss;
  double log_growth_pos;
  double log_growth_neg;
};

/// Index beyond which the modelled term sits exp(-delta) below the model's
/// peak, with a 1.25 safety factor for the unspecified O(1) constants.
long model_cutoff(double gauss, double log_growth, double delta);

/// Sums term(n) over all integers, center-outward in (n, -n) pairs with
/// compensated accumulation. Each direction stops at the later of the model
/// cutoff and three consecutive terms below eps * max(1, |partial|).
SeriesEvaluation sum_bilateral(const std::function<Complex(long)>& term,
                               const TailModel& model, const TruncationPolicy& policy);

/// sum_n z^n q^{n(n-1)/2}, the sum side of the Jacobi triple product.
SeriesEvaluation theta_series(Complex z, Complex q, const TruncationPolicy& policy = {});

/// sum_n (b q^n, a q^-n; p)_inf z^n q^{n(n-1)/2}.
SeriesEvaluation main_series(const SeriesParams& params, const TruncationPolicy& policy = {});

/// sum_n (b q^n, a q^-n; p)_inf / (-z q^n, -q^{1-n}/z; q)_inf.
SeriesEvaluation symmetric_series(const SeriesParams& params,
                                  const TruncationPolicy& policy = {});

enum class BaileySide { Left, Right };

/// Left:  sum (b1 q^n, b2 q^n, a1 q^-n, a2 q^-n; p)_inf z^n q^{n(n-1)}
/// Right: z sum (b1 q^n/z, b2 q^n/z, a1 z q^-n, a2 z q^-n; p)_inf z^-n q^{n(n-1)}
SeriesEvaluation bailey_series(const BaileyParams& params, BaileySide side,
                               const TruncationPolicy& policy = {});

/// How appell_lerch_rhs treats lattice points a q^{2n+1} = 1.
enum class PoleHandling {
  Cancel,  // divide the matching prefactor factor out analytically
  Reject,  // throw LatticePole
};

/// 2 (qa, q/a; q^2)_inf sum_n (-1/a)^n q^{n^2+n} / (1 - a q^{2n+1}).
SeriesEvaluation appell_lerch_rhs(Complex a, Complex q, const TruncationPolicy& policy = {},
                                  PoleHandling poles = PoleHandling::Cancel);

/// Sinh-kernel side of the Fourier transform of
/// g(x) = (b q^x, a q^-x; p)_inf / (-q^x, -q^{1-x}; q)_inf (params.z must be 1).
SeriesEvaluation fourier_series_side(const SeriesParams& params, double y,
                                     const TruncationPolicy& policy = {});

/// sum_n g(n) q^{mn} with g as above.
SeriesEvaluation weighted_series(const SeriesParams& params, int m,
                                 const TruncationPolicy& policy = {});

/// sum_n prod_j [a_j; b_j + alpha_j n]_{p_j} / (-z q^n, -q^{1-n}/z; q)_inf.
SeriesEvaluation multibasic_series(const MultibasicParams& params,
                                   const TruncationPolicy& policy = {});

/// Integrand/term shared by the symmetric series and integrals:
/// (b q^x, a q^-x; p)_inf / (-z q^x, -q^{1-x}/z; q)_inf at real x.
/// Throws DenominatorZero on a vanishing denominator factor.
Complex symmetric_profile(const SeriesParams& params, double x,
                          const TruncationPolicy& policy = {});

/// prod_j [a_j; b_j + alpha_j x]_{p_j} / (-z q^x, -q^{1-x}/z; q)_inf.
Complex multibasic_profile(const MultibasicParams& params, double x,
                           const TruncationPolicy& policy = {});

/// Growth rates of symmetric_profile: ln(|z| |a|^alpha / |q|) for x -> +inf
/// and ln(|b|^alpha / |z|) for x -> -inf, clamped below at 0.
TailModel symmetric_tail_model(const SeriesParams& params);
TailModel multibasic_tail_model(const MultibasicParams& params);

}  // namespace qsinc
