#pragma once

// 50-digit reference evaluations, written directly from the definitions and
// sharing no code with the library.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <complex>

namespace oracle {

using Real = boost::multiprecision::cpp_bin_float_50;
using Cplx = boost::multiprecision::cpp_complex_50;

inline Cplx lift(std::complex<double> z) { return Cplx(Real(z.real()), Real(z.imag())); }
inline std::complex<double> lower(const Cplx& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

inline Cplx ipow(Cplx base, long n) {
  if (n < 0) return Cplx(1) / ipow(base, -n);
  Cplx r(1);
  while (n > 0) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

/// prod_{k<n} (1 - a q^k)
inline Cplx qpoch_n(Cplx a, const Cplx& q, long n) {
  Cplx r(1);
  for (long k = 0; k < n; ++k, a *= q) r *= Cplx(1) - a;
  return r;
}

/// (a; q)_inf, multiplied until |a q^k| < 1e-45.
inline Cplx qpoch(Cplx a, const Cplx& q) {
  Cplx r(1);
  const Real tiny("1e-45");
  for (int k = 0; k < 100000; ++k, a *= q) {
    if (abs(a) < tiny) break;
    r *= Cplx(1) - a;
  }
  return r;
}

/// sum_{|n| <= N} term(n)
template <class F>
Cplx bilateral(F term, long N) {
  Cplx s(0);
  for (long n = -N; n <= N; ++n) s += term(n);
  return s;
}

inline Cplx theta_sum(Cplx z, Cplx q, long N = 60) {
  return bilateral([&](long n) { return ipow(z, n) * ipow(q, n * (n - 1) / 2); }, N);
}

inline Cplx main_sum(Cplx a, Cplx b, Cplx z, Cplx q, Cplx p, long N = 60) {
  return bilateral(
      [&](long n) {
        const Cplx qn = ipow(q, n);
        return qpoch(b * qn, p) * qpoch(a / qn, p) * ipow(z, n) * ipow(q, n * (n - 1) / 2);
      },
      N);
}

inline Cplx symmetric_sum(Cplx a, Cplx b, Cplx z, Cplx q, Cplx p, long N = 60, long m = 0) {
  return bilateral(
      [&](long n) {
        const Cplx qn = ipow(q, n);
        return qpoch(b * qn, p) * qpoch(a / qn, p) * ipow(qn, m) /
               (qpoch(-z * qn, q) * qpoch(-q / (z * qn), q));
      },
      N);
}

inline Cplx bailey_left(Cplx a1, Cplx a2, Cplx b1, Cplx b2, Cplx z, Cplx q, Cplx p,
                        long N = 40) {
  return bilateral(
      [&](long n) {
        const Cplx qn = ipow(q, n);
        return qpoch(b1 * qn, p) * qpoch(b2 * qn, p) * qpoch(a1 / qn, p) *
               qpoch(a2 / qn, p) * ipow(z, n) * ipow(q, n * (n - 1));
      },
      N);
}

/// Euler's pentagonal series for (q; q)_inf.
inline Cplx pentagonal(Cplx q, long K = 60) {
  return bilateral(
      [&](long k) {
        const Cplx t = ipow(q, k * (3 * k - 1) / 2);
        return (k % 2 == 0) ? t : Cplx(-t);
      },
      K);
}

inline Real gamma(const Real& x) { return boost::multiprecision::tgamma(x); }

}  // namespace oracle
