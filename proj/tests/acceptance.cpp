// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracle.hpp"
#include "qsinc/bilateral.hpp"
#include "qsinc/classical.hpp"
#include "qsinc/identities.hpp"
#include "qsinc/qcore.hpp"
#include "qsinc/quadrature.hpp"
#include "qsinc/sweep.hpp"

using namespace qsinc;

namespace {

constexpr double kPi = std::numbers::pi;

// Tolerances, one per criterion.
constexpr double kTolTriple = 1e-10;
constexpr double kTolBase = 1e-10;
constexpr double kTolMain = 1e-7;
constexpr double kTolSymmetric = 1e-7;
constexpr double kTolFunctional = 1e-9;
constexpr double kTolInvariance = 1e-9;
constexpr double kTolFourier = 1e-6;
constexpr double kTolVanishing = 1e-8;
constexpr double kTolWeighted = 1e-7;
constexpr double kTolBailey = 1e-8;
constexpr double kTolMultibasic = 1e-6;
constexpr double kTolAppellLerch = 1e-8;
constexpr double kTolClassical = 1e-6;
constexpr std::uint64_t kSeed = 20240611;

struct Tally {
  bool ok = true;
  double worst = 0.0;
  int count = 0;
  std::string note;

  void check(double err, double tol) {
    ++count;
    if (!(err <= tol)) ok = false;
    if (std::isnan(err) || err > worst) worst = err;
  }
  void report(const IdentityReport& r) {
    ++count;
    if (!r.pass) {
      ok = false;
      if (note.empty()) note = r.reason.empty() ? "rel_err above tol" : r.reason;
    }
    if (r.status == ReportStatus::Ok && r.rel_err > worst) worst = r.rel_err;
  }
};

double rel(Complex a, Complex b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

SeriesParams series(Complex a, Complex b, Complex z, double q, double p) {
  return SeriesParams::make(QParams::make(p, q), a, b, z);
}

Complex param(const ParamRecord& r, const char* key) { return r.at(key); }

Tally c1() {
  Tally t;
  for (double q : {0.2, 0.5, 0.8}) {
    for (Complex z : {Complex{0.5, 0}, Complex{1, 0}, Complex{1.5, 0}, Complex{0.6, 0.6}}) {
      const Complex ref = oracle::lower(oracle::theta_sum(oracle::lift(z), oracle::lift(q), 90));
      t.check(rel(theta_product(z, q), ref), kTolTriple);
    }
  }
  return t;
}

Tally c2() {
  Tally t;
  for (double q : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    t.report(verify(IdentityId::BaseIntegral, {{"q", q}}, kTolBase));
  }
  return t;
}

Tally c3() {
  Tally t;
  ParamGrid grid;
  grid.axes = {{"a", {0.2}},
               {"b", {0.3}},
               {"q", {0.4, 0.6, 0.8}},
               {"ratio", {0.3, 0.5, 0.7}},
               {"z", {1.0, Complex{0.5, 0.5}, 2.0}}};
  for (const auto& r : sweep(IdentityId::Main, grid, kTolMain).reports) t.report(r);
  return t;
}

Tally c4() {
  Tally t;
  const std::vector<ParamRecord> symmetric = {
      {{"a", 0.2}, {"b", 0.3}, {"z", 1.0}, {"q", 0.6}, {"p", 0.3}},
      {{"a", {0.3, 0.2}}, {"b", 0.4}, {"z", {-0.5, 0.6}}, {"q", 0.5}, {"ratio", 0.4}},
      {{"a", 0.5}, {"b", {0.1, -0.3}}, {"z", 2.0}, {"q", 0.8}, {"ratio", 0.5}},
      {{"a", -0.4}, {"b", 0.6}, {"z", {0.3, 0.9}}, {"q", 0.4}, {"ratio", 0.7}},
      {{"a", {0.0, 0.7}}, {"b", 0.2}, {"z", 0.7}, {"q", 0.7}, {"ratio", 0.3}},
      {{"a", 0.8}, {"b", 0.8}, {"z", {1.2, -0.4}}, {"q", 0.6}, {"ratio", 0.6}}};
  for (const auto& rec : symmetric) t.report(verify(IdentityId::Symmetric, rec, kTolSymmetric));
  for (double alpha : {0.3, 0.5, 0.7}) {
    t.report(verify_qbinomial_form(2.5, 0.75, alpha, 0.4, 1.0, kTolSymmetric));
    t.report(verify_qbinomial_form(3.0, 1.2, alpha, 0.3, {0.6, -0.3}, kTolSymmetric));
  }
  return t;
}

Tally c5() {
  Tally t;
  for (IdentityId id : {IdentityId::FunctionalEq1, IdentityId::FunctionalEq2}) {
    for (const auto& rec : random_draws(id, 50, kSeed)) t.report(verify(id, rec, kTolFunctional));
  }
  // f(a, b, z) = f(b, a, q/z)
  for (const auto& rec : random_draws(IdentityId::Main, 50, kSeed + 1)) {
    const double q = param(rec, "q").real();
    const double p = param(rec, "ratio").real() * q;
    const Complex a = param(rec, "a");
    const Complex b = param(rec, "b");
    const Complex z = param(rec, "z");
    const Complex lhs = main_series(series(a, b, z, q, p)).value;
    const Complex rhs = main_series(series(b, a, q / z, q, p)).value;
    t.check(std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)), kTolFunctional);
  }
  return t;
}

Tally c6() {
  Tally t;
  for (const auto& rec : random_draws(IdentityId::Invariance, 20, kSeed)) {
    t.report(verify(IdentityId::Invariance, rec, kTolInvariance));
  }
  return t;
}

ParamRecord fourier_point(double key_value, const char* key) {
  return {{"a", 0.1}, {"b", 0.2}, {"q", 0.5}, {"p", 0.2}, {key, key_value}};
}

Tally c7() {
  Tally t;
  for (double y : {0.5, 1.0, 2.0, 3.0}) {
    t.report(verify(IdentityId::Fourier, fourier_point(y, "y"), kTolFourier));
  }
  const auto g = series(0.1, 0.2, 1.0, 0.5, 0.2);
  for (double y : {2 * kPi, 4 * kPi}) {
    t.check(std::abs(fourier_integral(g, y).value), kTolVanishing);
  }
  return t;
}

Tally c8() {
  Tally t;
  for (int m = -2; m <= 2; ++m) {
    t.report(verify(IdentityId::WeightedM, fourier_point(m, "m"), kTolWeighted));
  }
  return t;
}

Tally c9() {
  Tally t;
  for (const auto& rec : random_draws(IdentityId::Bailey, 10, kSeed)) {
    t.report(verify(IdentityId::Bailey, rec, kTolBailey));
  }
  auto draws = random_draws(IdentityId::BaileyBinomial, 10, kSeed);
  draws[0]["theta"] = -1.2;
  draws[1]["theta"] = 0.0;
  draws[2]["theta"] = 0.7;
  for (const auto& rec : draws) t.report(verify(IdentityId::BaileyBinomial, rec, kTolBailey));
  return t;
}

Tally c10() {
  Tally t;
  struct Point {
    double p1, a1, b1, p2, a2, b2;
    Complex z;
  };
  const Point points[] = {{0.3, 2.0, 0.5, 0.5, 1.5, 0.25, 1.0},
                          {0.2, 3.0, 1.0, 0.6, 2.0, 0.5, {0.6, 0.2}},
                          {0.4, 1.5, 0.75, 0.4, 2.5, 1.25, {1.5, -0.5}}};
  for (double s : {0.5, 0.8}) {
    for (const Point& pt : points) {
      const double q = MultibasicParams::q_for_alpha_sum({pt.p1, pt.p2}, s);
      const auto mp = MultibasicParams::make_two_base(pt.p1, pt.p2, q, pt.a1, pt.b1, pt.a2,
                                                      pt.b2, pt.z);
      t.report(verify_multibasic(mp, kTolMultibasic));
    }
  }
  return t;
}

Tally c11() {
  Tally t;
  t.report(verify(IdentityId::AppellLerch, {{"a", 0.5}, {"q", 0.5}}, kTolAppellLerch));
  t.report(verify(IdentityId::AppellLerch, {{"a", 2.0}, {"q", 0.5}}, kTolAppellLerch));
  t.report(verify(IdentityId::AppellLerch, {{"a", 0.7}, {"q", 0.7}}, kTolAppellLerch));
  t.report(verify(IdentityId::AppellLerch, {{"a_exp", -0.5}, {"q", 0.49}}, kTolAppellLerch));
  return t;
}

Tally c12() {
  Tally t;
  for (double a : {1.5, 2.0, 3.0}) {
    for (double alpha : {1.0 / 3.0, 0.5, 1.0}) {
      for (double frac : {0.0, 0.25, -0.25}) {
        const OslerParams op{a, 0.0, alpha, frac * kPi * alpha};
        t.check(rel(osler_sum(op).value, osler_closed_form(op)), kTolClassical);
      }
    }
  }
  for (double a : {1.5, 2.0, 4.0}) {
    for (int l : {1, 2}) {
      for (double alpha : {0.25, 0.5, std::min(1.0, 2.0 / l)}) {
        t.report(classical_sum_eq_integral(a, alpha, l, kClassicalPolicy, kTolClassical));
      }
    }
    t.report(classical_sum_eq_integral(a, 2.0, 1, kClassicalPolicy, kTolClassical));
  }
  for (double x : {0.5, 1.5, 3.2}) {
    double previous = INFINITY;
    for (int k = 2; k <= 4; ++k) {
      const double err = std::abs(qgamma(x, 1.0 - std::pow(10.0, -k)) - gamma_classical(x));
      t.check(err < previous ? 0.0 : 1.0, 0.0);
      previous = err;
    }
  }
  return t;
}

std::string run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"qsinc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

Tally c13() {
  Tally t;
  const std::vector<std::vector<std::string>> commands = {
      {"sweep", "-i", "main", "--a", "0.2", "--b", "0.3", "--q", "0.4:0.8:3", "--ratio",
       "0.3:0.7:3", "--z", "1,0.5+0.5i,2"},
      {"sweep", "-i", "bailey", "--draws", "12", "--seed", "77"},
      {"sweep", "-i", "symmetric", "--draws", "12", "--seed", "78"}};
  for (const auto& base : commands) {
    auto serial = base;
    serial.insert(serial.end(), {"-j", "1"});
    auto parallel = base;
    parallel.insert(parallel.end(), {"-j", "4"});
    const std::string a = run_cli(serial);
    const std::string b = run_cli(parallel);
    const std::string c = run_cli(parallel);
    t.check(a == b && b == c && !a.empty() ? 0.0 : 1.0, 0.0);
  }
  return t;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<Tally()> run;
  };
  const Criterion criteria[] = {
      {"C1  triple product vs 50-digit oracle", c1},
      {"C2  base integral closed form", c2},
      {"C3  main sum = integral, 27-point grid", c3},
      {"C4  symmetric and q-binomial forms", c4},
      {"C5  functional equations and z -> q/z symmetry", c5},
      {"C6  invariance in (b/z, az)", c6},
      {"C7  Fourier transform and vanishing at 2 pi m", c7},
      {"C8  q^{mn} weights, m = -2..2", c8},
      {"C9  Bailey transformation and q-binomial form", c9},
      {"C10 multibasic, two bases", c10},
      {"C11 Appell-Lerch specialization", c11},
      {"C12 classical limits", c12},
      {"C13 byte-identical sweeps across thread counts", c13},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = c.run();
    } catch (const std::exception& e) {
      t.ok = false;
      t.note = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %-50s checks=%-3d worst=%.3g  %.2fs%s%s\n", t.ok ? "PASS" : "FAIL",
                c.label, t.count, t.worst, secs, t.note.empty() ? "" : "  ", t.note.c_str());
    if (!t.ok) ++failures;
  }
  std::printf("%d of 13 criteria passed\n", 13 - failures);
  return failures == 0 ? 0 : 1;
}
