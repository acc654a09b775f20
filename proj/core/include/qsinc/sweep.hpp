#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qsinc/identities.hpp"

namespace qsinc {

/// Cartesian product of named axes; the last axis varies fastest.
struct ParamGrid {
  std::vector<std::pair<std::string, std::vector<Complex>>> axes;

  std::size_t size() const noexcept;
  ParamRecord point(std::size_t index) const;
};

/// Inclusive "start:stop:count" range or comma list of reals / "a+bi" complexes.
std::vector<Complex> parse_axis(std::string_view text);
Complex parse_complex(std::string_view text);

struct SweepSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  double max_rel_err = 0.0;  // over points with status Ok
};

struct SweepResult {
  std::vector<IdentityReport> reports;
  SweepSummary summary;
};

/// One report per point, in point order whatever the thread count.
/// Throws InvalidGrid on an empty point set.
SweepResult sweep_points(IdentityId id, const std::vector<ParamRecord>& points, double tol,
                         const TruncationPolicy& policy = {}, const QuadratureSpec& spec = {},
                         unsigned threads = 1);

SweepResult sweep(IdentityId id, const ParamGrid& grid, double tol,
                  const TruncationPolicy& policy = {}, const QuadratureSpec& spec = {},
                  unsigned threads = 1);

SweepSummary summarize(const std::vector<IdentityReport>& reports) noexcept;

}  // namespace qsinc
