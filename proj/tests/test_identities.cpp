#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "doctest.h"
#include "qsinc/error.hpp"
#include "qsinc/identities.hpp"
#include "qsinc/report_io.hpp"
#include "qsinc/sweep.hpp"

using namespace qsinc;
constexpr double kPi = std::numbers::pi;

namespace {

// One valid point per identity.
ParamRecord sample(IdentityId id) {
  switch (id) {
    case IdentityId::Main:
    case IdentityId::FunctionalEq1:
    case IdentityId::FunctionalEq2:
      return {{"a", 0.2}, {"b", 0.3}, {"z", {0.5, 0.5}}, {"q", 0.6}, {"p", 0.3}};
    case IdentityId::Symmetric:
      return {{"a", {0.3, 0.2}}, {"b", 0.4}, {"z", {-0.5, 0.6}}, {"q", 0.5}, {"ratio", 0.4}};
    case IdentityId::QBinomialForm:
      return {{"a", 2.0}, {"b", 0.5}, {"alpha", 0.5}, {"p", 0.3}, {"z", {0.7, 0.2}}};
    case IdentityId::Osler:
      return {{"a", 2.0}, {"b", 0.25}, {"alpha", 0.5}, {"theta", 0.6}};
    case IdentityId::ClassicalSumInt:
      return {{"a", 2.0}, {"alpha", 0.5}, {"l", 2.0}};
    case IdentityId::AppellLerch:
      return {{"a", 0.5}, {"q", 0.5}};
    case IdentityId::Invariance:
      return {{"a", 0.3}, {"b", 0.4}, {"z", {0.8, 0.3}}, {"c", {1.2, 0.5}}, {"q", 0.5},
              {"p", 0.2}};
    case IdentityId::Fourier:
      return {{"a", 0.1}, {"b", 0.2}, {"y", 1.0}, {"q", 0.5}, {"p", 0.2}};
    case IdentityId::WeightedM:
      return {{"a", 0.1}, {"b", 0.2}, {"m", -1.0}, {"q", 0.5}, {"p", 0.2}};
    case IdentityId::Bailey:
      return {{"a1", 0.3}, {"a2", 0.4}, {"b1", {0.2, 0.1}}, {"b2", 0.5}, {"z", {0.8, 0.4}},
              {"q", 0.5}, {"p", 0.2}};
    case IdentityId::BaileyBinomial:
      return {{"a1", 2.0}, {"b1", 0.5}, {"a2", 3.0}, {"b2", 1.0},
              {"alpha", 0.4}, {"p", 0.5}, {"theta", 0.7}};
    case IdentityId::Multibasic:
      return {{"p1", 0.3}, {"a1", 2.0}, {"b1", 0.5}, {"p2", 0.5},
              {"a2", 1.5}, {"b2", 0.25}, {"z", 1.0}, {"alpha_sum", 0.5}};
    case IdentityId::BaseIntegral:
      return {{"q", 0.4}};
    case IdentityId::TripleProduct:
      return {{"z", {0.3, 1.1}}, {"q", 0.7}};
    case IdentityId::PoissonVanishing:
      return {{"a", 0.1}, {"b", 0.2}, {"m", 1.0}, {"q", 0.5}, {"p", 0.2}};
  }
  return {};
}

}  // namespace

TEST_CASE("every catalog identity verifies at a sample point") {
  CHECK(catalog().size() == static_cast<std::size_t>(kIdentityCount));
  for (const CatalogEntry& e : catalog()) {
    const IdentityReport r = verify(e.id, sample(e.id), e.default_tol);
    CHECK_MESSAGE(r.status == ReportStatus::Ok, e.name << ": " << r.reason);
    CHECK_MESSAGE(r.pass, e.name << " rel_err " << r.rel_err);
    CHECK(r.tol == e.default_tol);
    CHECK(r.id == e.id);
  }
}

TEST_CASE("catalog lookups") {
  std::set<std::string_view> names;
  for (const CatalogEntry& e : catalog()) {
    names.insert(e.name);
    CHECK(identity_from_name(e.name) == e.id);
    CHECK(to_string(e.id) == e.name);
    CHECK(&catalog_entry(e.id) == &e);
    CHECK(default_tolerance(e.id) > 0.0);
    CHECK(!e.anchor.empty());
  }
  CHECK(names.size() == catalog().size());
  CHECK(!identity_from_name("nope").has_value());
}

TEST_CASE("verify never throws on bad input") {
  ParamRecord bad = sample(IdentityId::Main);
  bad["p"] = 0.7;
  IdentityReport r = verify(IdentityId::Main, bad, 1e-7);
  CHECK(r.status == ReportStatus::InvalidParams);
  CHECK_FALSE(r.pass);
  CHECK(r.reason.find("|p| < |q|") != std::string::npos);
  CHECK(std::isnan(r.rel_err));

  ParamRecord extra = sample(IdentityId::Main);
  extra["w"] = 1.0;
  CHECK(verify(IdentityId::Main, extra, 1e-7).status == ReportStatus::InvalidParams);

  ParamRecord missing = sample(IdentityId::Main);
  missing.erase("z");
  CHECK(verify(IdentityId::Main, missing, 1e-7).status == ReportStatus::InvalidParams);

  const TruncationPolicy tiny{1e-15, 5, 4};
  r = verify(IdentityId::Main, sample(IdentityId::Main), 1e-7, tiny);
  CHECK(r.status == ReportStatus::Inconclusive);
  CHECK_FALSE(r.pass);

  ParamRecord guard = sample(IdentityId::BaseIntegral);
  guard["q"] = 0.97;
  CHECK(verify(IdentityId::BaseIntegral, guard, 1e-7).status == ReportStatus::InvalidParams);
  guard["override"] = 1.0;
  CHECK(verify(IdentityId::BaseIntegral, guard, 1e-7).pass);

  ParamRecord pole = sample(IdentityId::Fourier);
  pole["y"] = 0.0;
  CHECK(verify(IdentityId::Fourier, pole, 1e-7).status == ReportStatus::InvalidParams);
}

TEST_CASE("appell-lerch accepts an exponent") {
  const IdentityReport r =
      verify(IdentityId::AppellLerch, {{"a_exp", -0.5}, {"q", 0.49}}, 1e-8);
  CHECK(r.pass);
  CHECK(std::abs(r.lhs - 1.0667885240817349594) < 1e-12);
}

TEST_CASE("typed verifiers") {
  for (double alpha : {0.3, 0.5, 0.7}) {
    CHECK(verify_qbinomial_form(2.5, 0.75, alpha, 0.4, {0.6, -0.3}, 1e-7).pass);
  }
  CHECK_THROWS_AS(verify_qbinomial_form(2.5, 0.75, 1.2, 0.4, 1.0, 1e-7), Error);

  for (double theta : {-1.2, 0.0, 0.7}) {
    const BaileyBinomialParams bp{0.5, 0.4, 2.0, 0.5, 3.0, 1.0, theta};
    const IdentityReport r = verify_bailey_binomial(bp, 1e-8);
    CHECK(r.pass);
    if (theta == 0.0) CHECK(r.abs_err == 0.0);
  }
  CHECK_THROWS_AS(BaileyBinomialParams({1.5, 0.4, 2, 0.5, 3, 1, 0}).validate(), Error);

  for (double s : {0.5, 0.8}) {
    const double q = MultibasicParams::q_for_alpha_sum({0.3, 0.6}, s);
    const auto mp = MultibasicParams::make({{0.3, 2.0, 0.5}, {0.6, 1.0, 0.5}}, q, {0.9, 0.2});
    CHECK(verify_multibasic(mp, 1e-6).pass);
  }
}

TEST_CASE("report rules") {
  const IdentityReport a = make_report(IdentityId::Main, {}, 1.0, 1.0 + 1e-9, 1e-8);
  const IdentityReport b = make_report(IdentityId::Main, {}, 1.0 + 1e-9, 1.0, 1e-8);
  CHECK(a.abs_err == b.abs_err);
  CHECK(a.rel_err == b.rel_err);
  CHECK(a.pass == b.pass);
  CHECK(a.pass);
  // tiny values pass on the absolute criterion only
  CHECK(make_report(IdentityId::Main, {}, 1e-12, 2e-12, 1e-8).pass);
  CHECK_FALSE(make_report(IdentityId::Main, {}, 1.0, NAN, 1e-8).pass);
  CHECK_FALSE(make_report(IdentityId::Main, {}, 1.0, 1.1, 1e-8).pass);
}

TEST_CASE("property: tolerance monotonicity") {
  const IdentityReport r = verify(IdentityId::Main, sample(IdentityId::Main), 1e-7);
  for (double tol : {1e-14, 1e-12, 1e-10, 1e-8, 1e-6, 1e-3}) {
    const IdentityReport tight = make_report(r.id, r.params, r.lhs, r.rhs, tol);
    const IdentityReport loose = make_report(r.id, r.params, r.lhs, r.rhs, tol * 10);
    CHECK((!tight.pass || loose.pass));
  }
}

TEST_CASE("random draws") {
  const auto first = random_draws(IdentityId::Symmetric, 5, 42);
  const auto again = random_draws(IdentityId::Symmetric, 5, 42);
  const auto other = random_draws(IdentityId::Symmetric, 5, 43);
  CHECK(first == again);
  CHECK(first != other);
  for (IdentityId id : {IdentityId::Main, IdentityId::Symmetric, IdentityId::Invariance,
                        IdentityId::Bailey, IdentityId::BaileyBinomial, IdentityId::TripleProduct,
                        IdentityId::WeightedM, IdentityId::Fourier, IdentityId::FunctionalEq1,
                        IdentityId::FunctionalEq2}) {
    for (const ParamRecord& rec : random_draws(id, 4, 7)) {
      const IdentityReport r = verify(id, rec, default_tolerance(id));
      CHECK_MESSAGE(r.pass, to_string(id) << " " << r.reason << " rel " << r.rel_err);
    }
  }
  CHECK_THROWS_AS(random_draws(IdentityId::Osler, 1, 1), Error);
}

TEST_CASE("parsing") {
  CHECK(parse_complex("1.5") == Complex{1.5, 0.0});
  CHECK(parse_complex("0.5+0.25i") == Complex{0.5, 0.25});
  CHECK(parse_complex("-1-2i") == Complex{-1.0, -2.0});
  CHECK(parse_complex("1e-3+1e-2i") == Complex{1e-3, 1e-2});
  CHECK_THROWS_AS(parse_complex("abc"), Error);
  const auto range = parse_axis("0.1:0.5:5");
  REQUIRE(range.size() == 5);
  CHECK(std::abs(range[4].real() - 0.5) < 1e-15);
  CHECK(parse_axis("1,2+i,3").size() == 3);
  CHECK(parse_axis("0.3:0.3:1").size() == 1);
  for (const char* bad : {"", "1:2", "1:2:0", "1,,2", "1:2:x"}) {
    try {
      parse_axis(bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidGrid);
    }
  }
}

TEST_CASE("sweep over a 27-point grid") {
  ParamGrid grid;
  grid.axes = {{"a", parse_axis("0.1:0.5:3")},
               {"b", parse_axis("0.2,0.3,0.4+0.1i")},
               {"z", parse_axis("0.5,1,1.5+0.5i")},
               {"q", {0.6}},
               {"p", {0.3}}};
  REQUIRE(grid.size() == 27);
  CHECK(grid.point(1).at("z") == Complex{1.0, 0.0});
  CHECK(grid.point(3).at("b") == Complex{0.3, 0.0});
  const SweepResult one = sweep(IdentityId::Main, grid, 1e-7, {}, {}, 1);
  const SweepResult three = sweep(IdentityId::Main, grid, 1e-7, {}, {}, 3);
  CHECK(one.summary.total == 27);
  CHECK(one.summary.passed == 27);
  CHECK(one.summary.max_rel_err <= 1e-7);
  for (std::size_t i = 0; i < 27; ++i) {
    CHECK(to_json(one.reports[i]) == to_json(three.reports[i]));
  }
  CHECK_THROWS_AS(sweep_points(IdentityId::Main, {}, 1e-7), Error);
  ParamGrid empty;
  empty.axes = {{"a", {}}};
  CHECK(empty.size() == 0);
}

TEST_CASE("sweep isolates failing points") {
  std::vector<ParamRecord> pts(3, sample(IdentityId::Main));
  pts[1]["p"] = 0.9;
  const SweepResult r = sweep_points(IdentityId::Main, pts, 1e-7, {}, {}, 2);
  CHECK(r.reports[0].pass);
  CHECK(r.reports[1].status == ReportStatus::InvalidParams);
  CHECK(r.reports[2].pass);
  CHECK(r.summary.passed == 2);
  CHECK(r.summary.total == 3);
}

TEST_CASE("json and csv") {
  const IdentityReport r = verify(IdentityId::Main, sample(IdentityId::Main), 1e-7);
  const std::string j = to_json(r);
  CHECK(j.rfind("{\"identity\":\"main\",\"params\":", 0) == 0);
  CHECK(j.find('\n') == std::string::npos);
  CHECK(j.find("\"elapsed_ms\":0,") != std::string::npos);
  CHECK(to_json(report_from_json(j)) == j);

  const IdentityReport bad = verify(IdentityId::Main, {{"q", 0.5}}, 1e-7);
  const std::string jb = to_json(bad);
  CHECK(jb.find("\"lhs\":{\"re\":null,\"im\":null}") != std::string::npos);
  CHECK(to_json(report_from_json(jb)) == jb);

  CHECK(summary_json({3, 2, 1e-9}) ==
        "{\"summary\":{\"total\":3,\"passed\":2,\"max_rel_err\":1.0000000000000001e-09}}");

  const auto cols = param_columns({r});
  CHECK(cols == std::vector<std::string>{"a", "b", "p", "q", "z"});
  auto count = [](const std::string& s) { return std::count(s.begin(), s.end(), ','); };
  CHECK(count(csv_header(cols)) == count(to_csv_row(r, cols)));
  CHECK(to_text(r).find("main") != std::string::npos);
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(INFINITY) == "inf");
  CHECK(to_json(bad).find("\"abs_err\":null") != std::string::npos);
  (void)kPi;
}
