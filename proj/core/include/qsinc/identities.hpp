#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qsinc/params.hpp"
#include "qsinc/quadrature.hpp"
#include "qsinc/report.hpp"
#include "qsinc/types.hpp"

namespace qsinc {

struct CatalogEntry {
  IdentityId id;
  std::string_view name;    // CLI spelling, e.g. "base-integral"
  std::string_view anchor;  // the formula being checked
  std::string_view params;  // accepted parameter keys
  double default_tol;
};

std::span<const CatalogEntry> catalog() noexcept;
const CatalogEntry& catalog_entry(IdentityId id) noexcept;
std::string_view to_string(IdentityId id) noexcept;
std::optional<IdentityId> identity_from_name(std::string_view name) noexcept;
double default_tolerance(IdentityId id) noexcept;

/// Evaluates both sides of `id` at `params` and compares them.
///
/// Never throws for bad parameters or failed numerics: hypothesis violations
/// come back with status InvalidParams, truncation/quadrature failures with
/// status Inconclusive, both with pass = false and the reason filled in.
///
/// Base pairs are given as `q` and either `p` or `ratio` (p = ratio * q); a
/// nonzero `override` lifts the |q| <= 0.95, |p| <= 0.95 |q| guardrails.
IdentityReport verify(IdentityId id, const ParamRecord& params, double tol,
                      const TruncationPolicy& policy = {}, const QuadratureSpec& spec = {});

/// sum_n [a; b + alpha n]_p / (-z q^n, -q^{1-n}/z; q)_inf against the
/// matching integral, q = p^alpha. Routed through symmetric_series and
/// symmetric_integral after writing the q-binomial as a product ratio.
/// Throws on invalid parameters.
IdentityReport verify_qbinomial_form(double a, double b, double alpha, double p, Complex z,
                                     double tol, const TruncationPolicy& policy = {},
                                     const QuadratureSpec& spec = {},
                                     bool allow_extreme = false);

struct BaileyBinomialParams {
  double p;
  double alpha;
  double a1, b1, a2, b2;
  double theta;

  void validate() const;
};

/// sum [a1; b1 + alpha n]_p [a2; b2 + alpha n]_p p^{alpha n(n-1) + theta n} against
/// p^theta times the same sum with b_j -> b_j - theta and theta -> -theta.
IdentityReport verify_bailey_binomial(const BaileyBinomialParams& params, double tol,
                                      const TruncationPolicy& policy = {});

/// Multibasic sum against the multibasic integral.
IdentityReport verify_multibasic(const MultibasicParams& params, double tol,
                                 const TruncationPolicy& policy = {},
                                 const QuadratureSpec& spec = {});

/// `count` seeded parameter records inside the validated domain of `id`.
/// Complex parameters are drawn on annuli kept pi/12 away from the negative
/// real axis. Throws InvalidParams for identities without a random domain.
std::vector<ParamRecord> random_draws(IdentityId id, std::size_t count, std::uint64_t seed);

}  // namespace qsinc
