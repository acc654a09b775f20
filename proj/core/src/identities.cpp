#include "qsinc/identities.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <limits>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <string>

#include "qsinc/bilateral.hpp"
#include "qsinc/classical.hpp"
#include "qsinc/error.hpp"
#include "qsinc/qcore.hpp"

namespace qsinc {

namespace {

constexpr double kSeriesTol = 1e-8;
constexpr double kQuadTol = 1e-7;
constexpr double kClassicalTol = 1e-6;
constexpr double kPi = std::numbers::pi;

constexpr std::array<CatalogEntry, kIdentityCount> kCatalog{{
    {IdentityId::Main, "main",
     "sum (b q^n, a q^-n; p) z^n q^{n(n-1)/2} = (-z,-q/z;q)/ln(1/q) int_0^inf (bt/z, az/t; p)/(-t,-q/t; q) dt/t",
     "a b z q p|ratio override", kQuadTol},
    {IdentityId::Symmetric, "symmetric",
     "sum (b q^n, a q^-n; p)/(-z q^n, -q^{1-n}/z; q) = int (b q^x, a q^-x; p)/(-z q^x, -q^{1-x}/z; q) dx",
     "a b z q p|ratio override", kQuadTol},
    {IdentityId::QBinomialForm, "qbinomial-form",
     "sum [a; b+alpha n]_p/(-z q^n, -q^{1-n}/z; q) = int [a; b+alpha x]_p/(-z q^x, -q^{1-x}/z; q) dx, q = p^alpha",
     "a b alpha p z override", kQuadTol},
    {IdentityId::Osler, "osler",
     "sum binom(a, b+alpha n) v^{b+alpha n} = (1/alpha)(1+v)^a, v = e^{i theta}",
     "a b alpha theta", kClassicalTol},
    {IdentityId::ClassicalSumInt, "classical-sum-int",
     "sum binom(a, alpha n)^l = int binom(a, alpha x)^l dx, 0 < alpha <= 2/l", "a alpha l",
     kClassicalTol},
    {IdentityId::AppellLerch, "appell-lerch",
     "sum (a q^{n+2}, q/(a q^n); q^2) q^{n(n-1)/2} = 2 (qa, q/a; q^2) sum (-1/a)^n q^{n^2+n}/(1 - a q^{2n+1})",
     "a|a_exp q override", kSeriesTol},
    {IdentityId::Invariance, "invariance",
     "symmetric sum at (a, b, z) equals it at (a/c, b c, z c): depends on b/z and a z only",
     "a b z c q p|ratio override", kSeriesTol},
    {IdentityId::Fourier, "fourier",
     "int g(x) e^{ixy} dx = (2 pi i/ln q)/sinh(pi y/ln q) (-q,-q,e^{iy},q e^{-iy}; q)/(q,q,-e^{iy},-q e^{-iy}; q) sum g(n) e^{iny}",
     "a b y q p|ratio override", kQuadTol},
    {IdentityId::WeightedM, "weighted-m", "int g(x) q^{mx} dx = sum g(n) q^{mn}",
     "a b m q p|ratio override", kQuadTol},
    {IdentityId::Bailey, "bailey",
     "sum (b1 q^n, b2 q^n, a1 q^-n, a2 q^-n; p) z^n q^{n(n-1)} = z sum (b1 q^n/z, b2 q^n/z, a1 z q^-n, a2 z q^-n; p) z^-n q^{n(n-1)}",
     "a1 a2 b1 b2 z q p|ratio override", kSeriesTol},
    {IdentityId::BaileyBinomial, "bailey-binomial",
     "sum [a1; b1+alpha n]_p [a2; b2+alpha n]_p p^{alpha n(n-1)+theta n} = p^theta sum [a1; b1-theta+alpha n]_p [a2; b2-theta+alpha n]_p p^{alpha n(n-1)-theta n}",
     "a1 b1 a2 b2 alpha p theta", kSeriesTol},
    {IdentityId::Multibasic, "multibasic",
     "sum prod_j [a_j; b_j+alpha_j n]_{p_j}/(-z q^n, -q^{1-n}/z; q) = int prod_j [a_j; b_j+alpha_j x]_{p_j}/(-z q^x, -q^{1-x}/z; q) dx, q = p_j^{alpha_j}",
     "p1 a1 b1 [p2 a2 b2 .. p4 a4 b4] z q|alpha_sum", kQuadTol},
    {IdentityId::FunctionalEq1, "functional-eq1", "f(a, b, z) = f(a, b p, z) - b f(a, b p, q z)",
     "a b z q p|ratio override", kSeriesTol},
    {IdentityId::FunctionalEq2, "functional-eq2", "f(a, b, z) = f(a p, b, z) - a f(a p, b, z/q)",
     "a b z q p|ratio override", kSeriesTol},
    {IdentityId::BaseIntegral, "base-integral",
     "int_0^inf dt/(t (-t, -q/t; q)) = (q; q) ln(1/q)", "q override", kQuadTol},
    {IdentityId::TripleProduct, "triple-product",
     "sum z^n q^{n(n-1)/2} = (q, -z, -q/z; q)", "z q override", kSeriesTol},
    {IdentityId::PoissonVanishing, "poisson-vanishing",
     "int g(x) e^{2 pi i m x} dx = 0 for integer m != 0", "a b m q p|ratio override",
     kSeriesTol},
}};

// Typed access to a ParamRecord with the violated constraint named on failure.
class Reader {
 public:
  explicit Reader(const ParamRecord& p) : p_(p) {}

  bool has(const std::string& key) const { return p_.count(key) != 0; }

  Complex complex(const std::string& key) const {
    const auto it = p_.find(key);
    if (it == p_.end()) fail(ErrorKind::InvalidParams, "missing parameter '" + key + "'");
    if (!is_finite(it->second)) fail(ErrorKind::InvalidParams, "'" + key + "' must be finite");
    return it->second;
  }
  Complex complex_or(const std::string& key, Complex fallback) const {
    return has(key) ? complex(key) : fallback;
  }
  double real(const std::string& key) const {
    const Complex v = complex(key);
    if (v.imag() != 0.0) fail(ErrorKind::InvalidParams, "'" + key + "' must be real");
    return v.real();
  }
  double real_or(const std::string& key, double fallback) const {
    return has(key) ? real(key) : fallback;
  }
  int integer(const std::string& key) const {
    const double v = real(key);
    if (v != std::round(v) || std::abs(v) > 1e6) {
      fail(ErrorKind::InvalidParams, "'" + key + "' must be an integer");
    }
    return static_cast<int>(v);
  }
  bool override_set() const { return real_or("override", 0.0) != 0.0; }

  QParams bases() const {
    const Complex q = complex("q");
    if (has("p") && has("ratio")) fail(ErrorKind::InvalidParams, "give either p or ratio, not both");
    const Complex p = has("ratio") ? complex("ratio") * q : complex("p");
    return QParams::make(p, q, override_set());
  }

 private:
  const ParamRecord& p_;
};

void check_keys(IdentityId id, const ParamRecord& params) {
  std::set<std::string> allowed{"override"};
  if (id == IdentityId::Multibasic) {
    for (int j = 1; j <= 4; ++j) {
      for (const char* k : {"p", "a", "b"}) allowed.insert(k + std::to_string(j));
    }
    allowed.insert({"z", "q", "alpha_sum"});
  } else {
    std::string spec(catalog_entry(id).params);
    for (char& c : spec) {
      if (c == '|') c = ' ';
    }
    std::size_t pos = 0;
    while (pos < spec.size()) {
      const std::size_t end = std::min(spec.find(' ', pos), spec.size());
      if (end > pos) allowed.insert(spec.substr(pos, end - pos));
      pos = end + 1;
    }
  }
  for (const auto& [key, value] : params) {
    if (!allowed.count(key)) {
      fail(ErrorKind::InvalidParams,
           "unknown parameter '" + key + "' for " + std::string(to_string(id)));
    }
  }
}

SideDiagnostics diag(const QuadratureResult& r) {
  return {r.nodes_used, 0.0, r.error_estimate};
}

SideDiagnostics combine(std::initializer_list<SeriesEvaluation> parts) {
  SideDiagnostics d;
  for (const auto& s : parts) {
    d.terms += s.terms_used;
    d.tail_estimate += s.tail_estimate;
  }
  return d;
}

void require_quadrature_base(Complex q, bool override_set) {
  if (!is_finite(q) || q == Complex{} || !(std::abs(q) < 1.0)) {
    fail(ErrorKind::InvalidParams, "0 < |q| < 1 violated");
  }
  if (!override_set && std::abs(q) > QParams::kGuardrail) {
    fail(ErrorKind::InvalidParams, "|q| <= 0.95 guardrail violated (set override to lift)");
  }
}

TruncationPolicy classical_policy(const TruncationPolicy& policy, double tol) {
  TruncationPolicy c = kClassicalPolicy;
  c.eps = std::max(policy.eps, 1e-3 * tol);
  c.max_terms = std::max(policy.max_terms, kClassicalPolicy.max_terms);
  return c;
}

// Left side of the q-binomial Bailey transformation for shift theta.
SeriesEvaluation bailey_binomial_sum(const BaileyBinomialParams& bp, double b1, double b2,
                                     double theta, const TruncationPolicy& policy) {
  const double lp = std::log(bp.p);
  const double L = -bp.alpha * lp;
  const TailModel model{(1.0 - bp.alpha) * L,
                        theta * lp + bp.alpha * lp * (bp.a1 - b1 + bp.a2 - b2 + 2.0) + 2.0 * L,
                        bp.alpha * lp * (b1 + b2 + 2.0) - theta * lp};
  auto term = [&](long n) {
    const double dn = static_cast<double>(n);
    const Complex c1 = qbinomial(bp.a1, b1 + bp.alpha * dn, bp.p, policy);
    const Complex c2 = qbinomial(bp.a2, b2 + bp.alpha * dn, bp.p, policy);
    return c1 * c2 * std::exp(lp * (bp.alpha * dn * (dn - 1.0) + theta * dn));
  };
  return sum_bilateral(term, model, policy);
}

MultibasicParams read_multibasic(const Reader& r) {
  std::vector<MultibasicParams::FactorSpec> specs;
  std::vector<double> bases;
  for (int j = 1; j <= 4; ++j) {
    const std::string s = std::to_string(j);
    if (!r.has("p" + s)) {
      if (r.has("a" + s) || r.has("b" + s)) {
        fail(ErrorKind::InvalidParams, "a" + s + "/b" + s + " given without p" + s);
      }
      continue;
    }
    specs.push_back({r.real("p" + s), r.real("a" + s), r.real("b" + s)});
    bases.push_back(specs.back().p);
  }
  if (r.has("q") == r.has("alpha_sum")) {
    fail(ErrorKind::InvalidParams, "give exactly one of q and alpha_sum");
  }
  const double q =
      r.has("q") ? r.real("q") : MultibasicParams::q_for_alpha_sum(bases, r.real("alpha_sum"));
  return MultibasicParams::make(specs, q, r.complex_or("z", 1.0));
}

IdentityReport dispatch(IdentityId id, const ParamRecord& params, double tol,
                        const TruncationPolicy& policy, QuadratureSpec spec) {
  check_keys(id, params);
  const Reader r(params);
  if (r.override_set()) spec.allow_continuation = true;

  auto report = [&](Complex lhs, Complex rhs, SideDiagnostics ld, SideDiagnostics rd) {
    return make_report(id, params, lhs, rhs, tol, ld, rd);
  };
  auto series_params = [&](Complex z) {
    return SeriesParams::make(r.bases(), r.complex("a"), r.complex("b"), z);
  };

  switch (id) {
    case IdentityId::Main: {
      const SeriesParams sp = series_params(r.complex("z"));
      const SeriesEvaluation s = main_series(sp, policy);
      const QuadratureResult i = main_integral(sp, spec);
      return report(s.value, i.value, SideDiagnostics::from(s), diag(i));
    }
    case IdentityId::Symmetric: {
      const SeriesParams sp = series_params(r.complex_or("z", 1.0));
      const SeriesEvaluation s = symmetric_series(sp, policy);
      const QuadratureResult i = symmetric_integral(sp, spec);
      return report(s.value, i.value, SideDiagnostics::from(s), diag(i));
    }
    case IdentityId::QBinomialForm: {
      IdentityReport rep = verify_qbinomial_form(r.real("a"), r.real("b"), r.real("alpha"),
                                                 r.real("p"), r.complex_or("z", 1.0), tol,
                                                 policy, spec, r.override_set());
      rep.params = params;
      return rep;
    }
    case IdentityId::Osler: {
      const OslerParams op{r.real("a"), r.real("b"), r.real("alpha"), r.real("theta")};
      op.validate();
      const SeriesEvaluation s = osler_sum(op, classical_policy(policy, tol));
      return report(s.value, osler_closed_form(op), SideDiagnostics::from(s), {});
    }
    case IdentityId::ClassicalSumInt: {
      IdentityReport rep = classical_sum_eq_integral(r.real("a"), r.real("alpha"),
                                                     r.integer("l"),
                                                     classical_policy(policy, tol), tol);
      rep.params = params;
      return rep;
    }
    case IdentityId::AppellLerch: {
      const Complex q = r.complex("q");
      if (r.has("a") == r.has("a_exp")) {
        fail(ErrorKind::InvalidParams, "give exactly one of a and a_exp");
      }
      const QParams qp = QParams::make(q * q, q, r.override_set());
      const Complex a = r.has("a") ? r.complex("a") : std::pow(q, r.real("a_exp"));
      if (a == Complex{}) fail(ErrorKind::InvalidParams, "a != 0 violated");
      const SeriesEvaluation lhs =
          main_series(SeriesParams::make(qp, q * q / a, a * q * q, 1.0), policy);
      const SeriesEvaluation rhs = appell_lerch_rhs(a, q, policy);
      return report(lhs.value, rhs.value, SideDiagnostics::from(lhs),
                    SideDiagnostics::from(rhs));
    }
    case IdentityId::Invariance: {
      const SeriesParams sp = series_params(r.complex("z"));
      const Complex c = r.complex("c");
      if (c == Complex{}) fail(ErrorKind::InvalidParams, "c != 0 violated");
      const SeriesParams moved = SeriesParams::make(sp.qp, sp.a / c, sp.b * c, sp.z * c);
      const SeriesEvaluation lhs = symmetric_series(sp, policy);
      const SeriesEvaluation rhs = symmetric_series(moved, policy);
      return report(lhs.value, rhs.value, SideDiagnostics::from(lhs),
                    SideDiagnostics::from(rhs));
    }
    case IdentityId::Fourier: {
      const SeriesParams sp = series_params(1.0);
      const double y = r.real("y");
      const QuadratureResult i = fourier_integral(sp, y, spec);
      const SeriesEvaluation s = fourier_series_side(sp, y, policy);
      return report(i.value, s.value, diag(i), SideDiagnostics::from(s));
    }
    case IdentityId::WeightedM: {
      const SeriesParams sp = series_params(1.0);
      const int m = r.integer("m");
      const QuadratureResult i = weighted_integral(sp, m, spec);
      const SeriesEvaluation s = weighted_series(sp, m, policy);
      return report(i.value, s.value, diag(i), SideDiagnostics::from(s));
    }
    case IdentityId::Bailey: {
      const BaileyParams bp = BaileyParams::make(r.bases(), r.complex("a1"), r.complex("a2"),
                                                 r.complex("b1"), r.complex("b2"),
                                                 r.complex("z"));
      const SeriesEvaluation lhs = bailey_series(bp, BaileySide::Left, policy);
      const SeriesEvaluation rhs = bailey_series(bp, BaileySide::Right, policy);
      return report(lhs.value, rhs.value, SideDiagnostics::from(lhs),
                    SideDiagnostics::from(rhs));
    }
    case IdentityId::BaileyBinomial: {
      const BaileyBinomialParams bp{r.real("p"),  r.real("alpha"), r.real("a1"),
                                    r.real("b1"), r.real("a2"),    r.real("b2"),
                                    r.real("theta")};
      IdentityReport rep = verify_bailey_binomial(bp, tol, policy);
      rep.params = params;
      return rep;
    }
    case IdentityId::Multibasic: {
      IdentityReport rep = verify_multibasic(read_multibasic(r), tol, policy, spec);
      rep.params = params;
      return rep;
    }
    case IdentityId::FunctionalEq1:
    case IdentityId::FunctionalEq2: {
      const SeriesParams sp = series_params(r.complex("z"));
      const Complex p = sp.qp.p();
      const Complex q = sp.qp.q();
      auto f = [&](Complex a, Complex b, Complex z) {
        return main_series(SeriesParams::make(sp.qp, a, b, z), policy);
      };
      const SeriesEvaluation lhs = f(sp.a, sp.b, sp.z);
      SeriesEvaluation s1, s2;
      Complex rhs;
      if (id == IdentityId::FunctionalEq1) {
        s1 = f(sp.a, sp.b * p, sp.z);
        s2 = f(sp.a, sp.b * p, q * sp.z);
        rhs = s1.value - sp.b * s2.value;
      } else {
        s1 = f(sp.a * p, sp.b, sp.z);
        s2 = f(sp.a * p, sp.b, sp.z / q);
        rhs = s1.value - sp.a * s2.value;
      }
      return report(lhs.value, rhs, SideDiagnostics::from(lhs), combine({s1, s2}));
    }
    case IdentityId::BaseIntegral: {
      const Complex q = r.complex("q");
      require_quadrature_base(q, r.override_set());
      const QuadratureResult i = base_integral(q, spec);
      const Complex closed = qpoch_inf(q, q, policy) * -std::log(q);
      return report(i.value, closed, diag(i), {});
    }
    case IdentityId::TripleProduct: {
      const Complex q = r.complex("q");
      require_quadrature_base(q, r.override_set());
      const Complex z = r.complex("z");
      const SeriesEvaluation s = theta_series(z, q, policy);
      return report(s.value, theta_product(z, q, policy), SideDiagnostics::from(s), {});
    }
    case IdentityId::PoissonVanishing: {
      const SeriesParams sp = series_params(1.0);
      const int m = r.integer("m");
      if (m == 0) fail(ErrorKind::InvalidParams, "m != 0 required");
      const double y = 2.0 * kPi * m;
      const QuadratureResult i = fourier_integral(sp, y, spec);
      const SeriesEvaluation s = fourier_series_side(sp, y, policy);
      return report(i.value, s.value, diag(i), SideDiagnostics::from(s));
    }
  }
  fail(ErrorKind::InvalidParams, "unknown identity");
}

// Uniform doubles from the top 53 bits, so draws do not depend on the
// standard library's distribution implementation.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  // log-uniform radius, uniform argument in [-arg_max, arg_max]
  Complex annulus(double r_min, double r_max, double arg_max) {
    const double r = r_min * std::pow(r_max / r_min, uniform(0.0, 1.0));
    return std::polar(r, uniform(-arg_max, arg_max));
  }
  int integer(int lo, int hi) {
    return std::min(hi, lo + static_cast<int>(uniform(0.0, hi - lo + 1.0)));
  }

 private:
  std::mt19937_64 rng_;
};

constexpr double kArgMargin = kPi / 12.0;
constexpr double kArgMax = kPi - kArgMargin;

}  // namespace

std::string_view to_string(ReportStatus status) noexcept {
  switch (status) {
    case ReportStatus::Ok: return "ok";
    case ReportStatus::InvalidParams: return "invalid-params";
    case ReportStatus::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

IdentityReport make_report(IdentityId id, ParamRecord params, Complex lhs, Complex rhs,
                           double tol, SideDiagnostics lhs_diag, SideDiagnostics rhs_diag) {
  IdentityReport rep;
  rep.id = id;
  rep.params = std::move(params);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.tol = tol;
  rep.lhs_diag = lhs_diag;
  rep.rhs_diag = rhs_diag;
  rep.abs_err = std::abs(lhs - rhs);
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  rep.rel_err = scale > 0.0 ? rep.abs_err / scale : 0.0;
  rep.pass = std::isfinite(rep.abs_err) &&
             (rep.abs_err <= tol || (scale > tol && rep.rel_err <= tol));
  return rep;
}

IdentityReport failed_report(IdentityId id, ParamRecord params, double tol,
                             ReportStatus status, std::string reason) {
  IdentityReport rep;
  rep.id = id;
  rep.params = std::move(params);
  rep.tol = tol;
  rep.abs_err = std::numeric_limits<double>::quiet_NaN();
  rep.rel_err = std::numeric_limits<double>::quiet_NaN();
  rep.lhs = rep.rhs = Complex{std::numeric_limits<double>::quiet_NaN(),
                              std::numeric_limits<double>::quiet_NaN()};
  rep.pass = false;
  rep.status = status;
  rep.reason = std::move(reason);
  return rep;
}

std::span<const CatalogEntry> catalog() noexcept { return kCatalog; }

const CatalogEntry& catalog_entry(IdentityId id) noexcept {
  return kCatalog[static_cast<std::size_t>(id)];
}

std::string_view to_string(IdentityId id) noexcept { return catalog_entry(id).name; }

std::optional<IdentityId> identity_from_name(std::string_view name) noexcept {
  for (const auto& e : kCatalog) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

double default_tolerance(IdentityId id) noexcept { return catalog_entry(id).default_tol; }

IdentityReport verify(IdentityId id, const ParamRecord& params, double tol,
                      const TruncationPolicy& policy, const QuadratureSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  IdentityReport rep;
  try {
    if (!(tol > 0.0) || !std::isfinite(tol)) fail(ErrorKind::InvalidParams, "tol > 0 violated");
    policy.validate();
    spec.validate();
    rep = dispatch(id, params, tol, policy, spec);
  } catch (const Error& e) {
    const ReportStatus status =
        is_parameter_error(e.kind()) ? ReportStatus::InvalidParams : ReportStatus::Inconclusive;
    rep = failed_report(id, params, tol, status, e.what());
  }
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

IdentityReport verify_qbinomial_form(double a, double b, double alpha, double p, Complex z,
                                     double tol, const TruncationPolicy& policy,
                                     const QuadratureSpec& spec, bool allow_extreme) {
  if (!(p > 0.0 && p < 1.0)) fail(ErrorKind::InvalidParams, "0 < p < 1 violated");
  if (!(alpha > 0.0 && alpha < 1.0)) fail(ErrorKind::InvalidParams, "0 < alpha < 1 violated");
  if (!std::isfinite(a) || !std::isfinite(b)) fail(ErrorKind::InvalidParams, "a, b must be finite");
  const double q = std::pow(p, alpha);
  const QParams qp = QParams::make(p, q, allow_extreme);

  // [a; u]_p = (p^{u+1}, p^{a-u+1}; p) / (p, p^{a+1}; p), and u = b + alpha x
  // turns the numerator into the symmetric profile at (p^{a-b+1}, p^{b+1}).
  const ProductTrace pole = qpoch_trace(std::pow(p, a + 1.0), p, policy);
  if (pole.min_factor < 2.0 * kPoleTolerance) {
    fail(ErrorKind::PoleAtNonpositiveInteger, "Gamma_p(a+1) has a pole");
  }
  const Complex scale = 1.0 / (qpoch_inf(p, p, policy) * pole.value);
  const SeriesParams sp =
      SeriesParams::make(qp, std::pow(p, a - b + 1.0), std::pow(p, b + 1.0), z);
  const SeriesEvaluation s = symmetric_series(sp, policy);
  const QuadratureResult i = symmetric_integral(sp, spec);
  SideDiagnostics ld = SideDiagnostics::from(s);
  ld.tail_estimate *= std::abs(scale);
  SideDiagnostics rd = diag(i);
  rd.error_estimate *= std::abs(scale);
  ParamRecord params{{"a", a}, {"b", b}, {"alpha", alpha}, {"p", p}, {"z", z}};
  return make_report(IdentityId::QBinomialForm, std::move(params), scale * s.value,
                     scale * i.value, tol, ld, rd);
}

void BaileyBinomialParams::validate() const {
  if (!(p > 0.0 && p < 1.0)) fail(ErrorKind::InvalidParams, "0 < p < 1 violated");
  if (!(alpha > 0.0 && alpha < 1.0)) fail(ErrorKind::InvalidParams, "0 < alpha < 1 violated");
  for (double v : {a1, b1, a2, b2, theta}) {
    if (!std::isfinite(v)) fail(ErrorKind::InvalidParams, "parameters must be finite");
  }
}

IdentityReport verify_bailey_binomial(const BaileyBinomialParams& bp, double tol,
                                      const TruncationPolicy& policy) {
  bp.validate();
  const SeriesEvaluation lhs = bailey_binomial_sum(bp, bp.b1, bp.b2, bp.theta, policy);
  const SeriesEvaluation rhs =
      bailey_binomial_sum(bp, bp.b1 - bp.theta, bp.b2 - bp.theta, -bp.theta, policy);
  const double shift = std::pow(bp.p, bp.theta);
  ParamRecord params{{"p", bp.p},   {"alpha", bp.alpha}, {"a1", bp.a1},      {"b1", bp.b1},
                     {"a2", bp.a2}, {"b2", bp.b2},       {"theta", bp.theta}};
  SideDiagnostics rd = SideDiagnostics::from(rhs);
  rd.tail_estimate *= shift;
  return make_report(IdentityId::BaileyBinomial, std::move(params), lhs.value,
                     shift * rhs.value, tol, SideDiagnostics::from(lhs), rd);
}

IdentityReport verify_multibasic(const MultibasicParams& mp, double tol,
                                 const TruncationPolicy& policy, const QuadratureSpec& spec) {
  if (!(mp.alpha_sum() < 1.0)) fail(ErrorKind::InvalidParams, "sum of alpha_j < 1 violated");
  const SeriesEvaluation s = multibasic_series(mp, policy);
  const QuadratureResult i = multibasic_integral(mp, spec);
  ParamRecord params{{"q", mp.q}, {"z", mp.z}};
  for (std::size_t j = 0; j < mp.factors.size(); ++j) {
    const std::string k = std::to_string(j + 1);
    params["p" + k] = mp.factors[j].p;
    params["a" + k] = mp.factors[j].a;
    params["b" + k] = mp.factors[j].b;
  }
  return make_report(IdentityId::Multibasic, std::move(params), s.value, i.value, tol,
                     SideDiagnostics::from(s), diag(i));
}

std::vector<ParamRecord> random_draws(IdentityId id, std::size_t count, std::uint64_t seed) {
  Draw d(seed);
  std::vector<ParamRecord> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    ParamRecord rec;
    auto bases = [&] {
      rec["q"] = d.uniform(0.3, 0.8);
      rec["ratio"] = d.uniform(0.2, 0.6);
    };
    auto coefficients = [&] {
      rec["a"] = d.annulus(0.1, 0.9, kArgMax);
      rec["b"] = d.annulus(0.1, 0.9, kArgMax);
    };
    switch (id) {
      // f is defined through its integral on Re z > 0.
      case IdentityId::Main:
      case IdentityId::FunctionalEq1:
      case IdentityId::FunctionalEq2:
        bases();
        coefficients();
        rec["z"] = d.annulus(0.5, 2.0, kPi / 2 - kArgMargin);
        break;
      case IdentityId::Symmetric:
        bases();
        coefficients();
        rec["z"] = d.annulus(0.5, 2.0, kArgMax);
        break;
      case IdentityId::Invariance:
        bases();
        coefficients();
        rec["z"] = d.annulus(0.5, 2.0, kPi / 3);
        rec["c"] = d.annulus(0.5, 2.0, kPi / 2);
        break;
      case IdentityId::Bailey:
        bases();
        for (const char* k : {"a1", "a2", "b1", "b2"}) rec[k] = d.annulus(0.1, 0.9, kArgMax);
        rec["z"] = d.annulus(0.5, 2.0, kArgMax);
        break;
      case IdentityId::BaileyBinomial: {
        rec["p"] = d.uniform(0.3, 0.7);
        rec["alpha"] = d.uniform(0.2, 0.6);
        const double a1 = d.uniform(1.0, 4.0);
        const double a2 = d.uniform(1.0, 4.0);
        rec["a1"] = a1;
        rec["b1"] = d.uniform(0.0, a1);
        rec["a2"] = a2;
        rec["b2"] = d.uniform(0.0, a2);
        rec["theta"] = d.uniform(-1.5, 1.5);
        break;
      }
      case IdentityId::TripleProduct:
        rec["q"] = d.uniform(0.1, 0.9);
        rec["z"] = d.annulus(0.3, 3.0, kArgMax);
        break;
      case IdentityId::WeightedM:
        bases();
        coefficients();
        rec["m"] = d.integer(-2, 2);
        break;
      case IdentityId::Fourier:
        bases();
        rec["a"] = d.uniform(-0.9, 0.9);
        rec["b"] = d.uniform(-0.9, 0.9);
        rec["y"] = d.uniform(0.25, 3.0);
        break;
      default:
        fail(ErrorKind::InvalidParams,
             "no random domain for " + std::string(to_string(id)) + "; use a grid");
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace qsinc
