#include "qsinc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <thread>

#include "qsinc/error.hpp"

namespace qsinc {

namespace {

double parse_double(std::string_view text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    fail(ErrorKind::InvalidGrid, "not a number: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  if (text.empty()) fail(ErrorKind::InvalidGrid, "empty value");
  if (text.back() != 'i') return {parse_double(text), 0.0};
  const std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not an exponent sign or the leading sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [](std::string_view s) {
    if (s == "+" || s.empty()) return 1.0;
    if (s == "-") return -1.0;
    return parse_double(s.front() == '+' ? s.substr(1) : s);
  };
  if (split == std::string_view::npos) return {0.0, imag_part(body)};
  return {parse_double(body.substr(0, split)), imag_part(body.substr(split))};
}

std::vector<Complex> parse_axis(std::string_view text) {
  std::vector<Complex> values;
  if (text.find(':') != std::string_view::npos) {
    const std::size_t c1 = text.find(':');
    const std::size_t c2 = text.find(':', c1 + 1);
    if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos) {
      fail(ErrorKind::InvalidGrid, "range must read start:stop:count");
    }
    const double start = parse_double(text.substr(0, c1));
    const double stop = parse_double(text.substr(c1 + 1, c2 - c1 - 1));
    const double count = parse_double(text.substr(c2 + 1));
    if (!(count >= 1.0) || count != std::floor(count) || count > 1e6) {
      fail(ErrorKind::InvalidGrid, "range count must be a positive integer");
    }
    const long n = static_cast<long>(count);
    if (n == 1 && start != stop) fail(ErrorKind::InvalidGrid, "count 1 needs start == stop");
    for (long k = 0; k < n; ++k) {
      values.emplace_back(n == 1 ? start : start + (stop - start) * k / (n - 1.0), 0.0);
    }
    return values;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    values.push_back(parse_complex(text.substr(pos, end - pos)));
    pos = end + 1;
  }
  return values;
}

std::size_t ParamGrid::size() const noexcept {
  if (axes.empty()) return 0;
  std::size_t n = 1;
  for (const auto& [name, values] : axes) n *= values.size();
  return n;
}

ParamRecord ParamGrid::point(std::size_t index) const {
  ParamRecord rec;
  for (auto it = axes.rbegin(); it != axes.rend(); ++it) {
    const auto& values = it->second;
    rec[it->first] = values[index % values.size()];
    index /= values.size();
  }
  return rec;
}

SweepSummary summarize(const std::vector<IdentityReport>& reports) noexcept {
  SweepSummary s;
  s.total = reports.size();
  for (const auto& r : reports) {
    if (r.pass) ++s.passed;
    if (r.status == ReportStatus::Ok && std::isfinite(r.rel_err)) {
      s.max_rel_err = std::max(s.max_rel_err, r.rel_err);
    }
  }
  return s;
}

SweepResult sweep_points(IdentityId id, const std::vector<ParamRecord>& points, double tol,
                         const TruncationPolicy& policy, const QuadratureSpec& spec,
                         unsigned threads) {
  if (points.empty()) fail(ErrorKind::InvalidGrid, "grid is empty");
  SweepResult out;
  out.reports.resize(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < points.size();) {
      out.reports[i] = verify(id, points[i], tol, policy, spec);
    }
  };
  const unsigned n = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(points.size()));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  out.summary = summarize(out.reports);
  return out;
}

SweepResult sweep(IdentityId id, const ParamGrid& grid, double tol,
                  const TruncationPolicy& policy, const QuadratureSpec& spec,
                  unsigned threads) {
  const std::size_t n = grid.size();
  if (n == 0) fail(ErrorKind::InvalidGrid, "grid is empty");
  std::vector<ParamRecord> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) points.push_back(grid.point(i));
  return sweep_points(id, points, tol, policy, spec, threads);
}

}  // namespace qsinc
