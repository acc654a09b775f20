#include "qsinc/rules.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "qsinc/error.hpp"
#include "qsinc/summation.hpp"

namespace qsinc {

namespace {

GaussRule build_gauss_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
  static std::mutex mutex;
  static std::map<int, GaussRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_gauss_rule(order)).first;
  return it->second;
}

PanelSum composite_gauss(const RealIntegrand& f, double lo, double hi, long panels) {
  if (panels < 1) fail(ErrorKind::InvalidParams, "composite_gauss needs at least one panel");
  const GaussRule& rule = gauss_legendre(kPanelOrder);
  const double width = (hi - lo) / static_cast<double>(panels);
  const double half = 0.5 * width;
  CompensatedComplexSum total;
  CompensatedSum l1;
  PanelSum out;
  for (long j = 0; j < panels; ++j) {
    const double mid = lo + (static_cast<double>(j) + 0.5) * width;
    Complex panel{};
    double panel_l1 = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const Complex v = f(mid + half * rule.nodes[i]);
      panel += rule.weights[i] * v;
      const double m = std::abs(v);
      panel_l1 += rule.weights[i] * m;
      if (m > out.peak) out.peak = m;
    }
    total += half * panel;
    l1 += half * panel_l1;
    out.evaluations += static_cast<long>(rule.nodes.size());
  }
  out.value = total.value();
  out.l1 = l1.value();
  return out;
}

TanhSinhResult tanh_sinh(const std::function<Complex(double, double)>& f, double tol,
                         long max_evaluations) {
  constexpr double half_pi = 0.5 * std::numbers::pi;
  constexpr double t_max = 6.5;  // weights below ~1e-300 beyond this
  TanhSinhResult out;

  auto contribution = [&](double t) {
    // x = tanh(s), 1 - x = e^{-s} / cosh(s), weight = (pi/2) cosh t / cosh^2 s
    const double s = half_pi * std::sinh(t);
    const double cs = std::cosh(s);
    const double w = half_pi * std::cosh(t) / (cs * cs);
    const double complement = std::exp(-s) / cs;
    if (!(complement > 0.0) || w == 0.0) return Complex{};
    const double x = std::tanh(s);
    out.evaluations += 2;
    return w * (f(x, complement) + f(-x, complement));
  };

  double h = 1.0;
  CompensatedComplexSum sum;
  sum += half_pi * f(0.0, 1.0);
  out.evaluations = 1;
  for (double t = h; t <= t_max; t += h) sum += contribution(t);
  Complex estimate = h * sum.value();
  out.levels = 1;

  while (out.evaluations < max_evaluations) {
    h *= 0.5;
    for (double t = h; t <= t_max; t += 2.0 * h) sum += contribution(t);
    const Complex next = h * sum.value();
    out.error_estimate = std::abs(next - estimate);
    estimate = next;
    ++out.levels;
    if (out.levels >= 4 && out.error_estimate <= tol * std::max(1.0, std::abs(estimate))) {
      break;
    }
  }
  out.value = estimate;
  return out;
}

}  // namespace qsinc
