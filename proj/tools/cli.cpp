#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsinc/classical.hpp"
#include "qsinc/error.hpp"
#include "qsinc/identities.hpp"
#include "qsinc/qcore.hpp"
#include "qsinc/report_io.hpp"
#include "qsinc/sweep.hpp"

namespace qsinc::cli {

namespace {

// Every parameter key any identity (or the limit study) accepts.
const std::vector<std::string> kParamKeys{
    "a",  "b",  "z",  "q",  "p",  "ratio", "c",  "y",  "m",     "alpha", "theta",
    "l",  "x",  "a1", "a2", "a3", "a4",    "b1", "b2", "b3",    "b4",    "p1",
    "p2", "p3", "p4", "a_exp", "alpha_sum", "override"};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string identity;
  std::map<std::string, std::string> raw;  // key -> flag text
  std::optional<double> tol;
  std::string format = "json";
  std::string output;
  bool timing = false;
  std::optional<double> eps;
  std::optional<long> max_terms;
  std::optional<double> quad_eps;
  std::optional<double> half_width;
  std::optional<int> nodes_per_unit;
  unsigned threads = 1;
  std::optional<std::size_t> draws;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--identity,-i", o.identity, "identity name (see `catalog`)")->required();
  for (const auto& key : kParamKeys) {
    cmd->add_option_function<std::string>(
        "--" + key, [&o, key](const std::string& v) { o.raw[key] = v; },
        "parameter " + key);
  }
  cmd->add_option("--tol", o.tol, "pass tolerance (default depends on the identity)");
  cmd->add_option("--format,-f", o.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--output,-o", o.output, "write data here instead of stdout");
  cmd->add_flag("--timing", o.timing, "report wall-clock time (breaks byte-identical reruns)");
  cmd->add_option("--eps", o.eps, "series truncation eps");
  cmd->add_option("--max-terms", o.max_terms, "series term cap (also QSINC_MAX_TERMS)");
  cmd->add_option("--quad-eps", o.quad_eps, "quadrature refinement eps");
  cmd->add_option("--half-width", o.half_width, "minimum quadrature truncation radius");
  cmd->add_option("--nodes-per-unit", o.nodes_per_unit, "initial quadrature node density");
}

IdentityId identity_or_throw(const std::string& name) {
  const auto id = identity_from_name(name);
  if (!id) throw UsageError("unknown identity '" + name + "' (see `qsinc catalog`)");
  return *id;
}

TruncationPolicy make_policy(const Options& o) {
  TruncationPolicy policy;
  if (const char* env = std::getenv("QSINC_MAX_TERMS")) {
    const std::string text(env);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size() || v < policy.min_terms) {
      throw UsageError("QSINC_MAX_TERMS must be an integer >= 4, got '" + text + "'");
    }
    policy.max_terms = v;
  }
  if (o.max_terms) policy.max_terms = *o.max_terms;
  if (o.eps) policy.eps = *o.eps;
  try {
    policy.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return policy;
}

QuadratureSpec make_spec(const Options& o) {
  QuadratureSpec spec;
  if (o.quad_eps) spec.eps = *o.quad_eps;
  if (o.half_width) spec.half_width = *o.half_width;
  if (o.nodes_per_unit) spec.nodes_per_unit = *o.nodes_per_unit;
  try {
    spec.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return spec;
}

double tolerance(const Options& o, IdentityId id) {
  const double tol = o.tol.value_or(default_tolerance(id));
  if (!(tol > 0.0) || !std::isfinite(tol)) throw UsageError("--tol must be positive");
  return tol;
}

Complex parse_value(const std::string& key, const std::string& text) {
  try {
    return parse_complex(text);
  } catch (const Error&) {
    throw UsageError("--" + key + ": cannot parse '" + text + "'");
  }
}

// Routes data to --output or the given stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::ios_base::failure("cannot open " + path);
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int exit_for(const IdentityReport& r) {
  switch (r.status) {
    case ReportStatus::InvalidParams: return kExitInvalidParams;
    case ReportStatus::Inconclusive: return kExitInconclusive;
    case ReportStatus::Ok: break;
  }
  return r.pass ? kExitPass : kExitFail;
}

void emit_reports(const std::vector<IdentityReport>& reports, const Options& o,
                  std::ostream& out) {
  if (o.format == "csv") {
    const auto columns = param_columns(reports);
    out << csv_header(columns) << '\n';
    for (const auto& r : reports) out << to_csv_row(r, columns, o.timing) << '\n';
  } else if (o.format == "text") {
    for (const auto& r : reports) out << to_text(r, o.timing) << '\n';
  } else {
    for (const auto& r : reports) out << to_json(r, o.timing) << '\n';
  }
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const IdentityId id = identity_or_throw(o.identity);
  ParamRecord params;
  for (const auto& [key, text] : o.raw) params[key] = parse_value(key, text);
  const TruncationPolicy policy = make_policy(o);
  const QuadratureSpec spec = make_spec(o);
  const IdentityReport r = verify(id, params, tolerance(o, id), policy, spec);
  Sink sink(o.output, out);
  emit_reports({r}, o, *sink);
  if (!r.reason.empty()) err << to_string(r.status) << ": " << r.reason << '\n';
  return exit_for(r);
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  const IdentityId id = identity_or_throw(o.identity);
  const TruncationPolicy policy = make_policy(o);
  const QuadratureSpec spec = make_spec(o);
  const double tol = tolerance(o, id);

  std::vector<ParamRecord> points;
  try {
    if (o.draws) {
      if (*o.draws == 0) throw UsageError("--draws must be positive");
      points = random_draws(id, *o.draws, o.seed);
      for (auto& rec : points) {
        for (const auto& [key, text] : o.raw) rec[key] = parse_value(key, text);
      }
    } else {
      ParamGrid grid;
      for (const auto& [key, text] : o.raw) grid.axes.emplace_back(key, parse_axis(text));
      if (grid.size() == 0) throw UsageError("empty grid: give at least one parameter");
      for (std::size_t i = 0; i < grid.size(); ++i) points.push_back(grid.point(i));
    }
  } catch (const Error& e) {
    throw UsageError(e.what());
  }

  const SweepResult result = sweep_points(id, points, tol, policy, spec, o.threads);
  Sink sink(o.output, out);
  emit_reports(result.reports, o, *sink);
  if (o.format == "json") {
    *sink << summary_json(result.summary) << '\n';
  } else {
    err << summary_json(result.summary) << '\n';
  }
  return result.summary.passed == result.summary.total ? kExitPass : kExitFail;
}

struct LimitRow {
  double parameter;
  Complex lhs;
  Complex rhs;
  double error;
  std::string status;  // empty when the row evaluated
};

void emit_rows(const std::vector<LimitRow>& rows, const std::string& label, const Options& o,
               std::ostream& out) {
  if (o.format == "csv") {
    out << label << ",lhs_re,lhs_im,rhs_re,rhs_im,error,status\n";
    for (const auto& r : rows) {
      out << format_number(r.parameter) << ',' << format_number(r.lhs.real()) << ','
          << format_number(r.lhs.imag()) << ',' << format_number(r.rhs.real()) << ','
          << format_number(r.rhs.imag()) << ',' << format_number(r.error) << ','
          << (r.status.empty() ? "ok" : r.status) << '\n';
    }
  } else if (o.format == "text") {
    char line[256];
    std::snprintf(line, sizeof line, "%-14s %-24s %-24s %-12s\n", label.c_str(), "lhs", "rhs",
                  "error");
    out << line;
    for (const auto& r : rows) {
      std::snprintf(line, sizeof line, "%-14.6g %-24.16g %-24.16g %-12.4g %s\n", r.parameter,
                    r.lhs.real(), r.rhs.real(), r.error, r.status.c_str());
      out << line;
    }
  } else {
    for (const auto& r : rows) {
      out << "{\"" << label << "\":" << format_number(r.parameter) << ",\"lhs\":{\"re\":"
          << format_number(r.lhs.real()) << ",\"im\":" << format_number(r.lhs.imag())
          << "},\"rhs\":{\"re\":" << format_number(r.rhs.real())
          << ",\"im\":" << format_number(r.rhs.imag())
          << "},\"error\":" << (std::isfinite(r.error) ? format_number(r.error) : "null")
          << ",\"status\":\"" << (r.status.empty() ? "ok" : r.status) << "\"}\n";
    }
  }
}

double real_param(const Options& o, const std::string& key, std::optional<double> fallback) {
  const auto it = o.raw.find(key);
  if (it == o.raw.end()) {
    if (!fallback) throw UsageError("limit study needs --" + key);
    return *fallback;
  }
  const Complex v = parse_value(key, it->second);
  if (v.imag() != 0.0) throw UsageError("--" + key + " must be real");
  return v.real();
}

int cmd_limit(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<LimitRow> rows;
  std::string label;
  bool ok = false;
  const TruncationPolicy base = make_policy(o);
  if (o.identity == "qgamma") {
    label = "q";
    const double x = real_param(o, "x", std::nullopt);
    double exact = 0.0;
    try {
      exact = gamma_classical(x);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    for (int k = 1; k <= 4; ++k) {
      const double q = 1.0 - std::pow(10.0, -k);
      LimitRow row{q, {}, exact, NAN, ""};
      try {
        row.lhs = qgamma(x, q, base);
        row.error = std::abs(row.lhs - exact);
      } catch (const Error& e) {
        row.status = std::string(to_string(e.kind()));
      }
      rows.push_back(row);
    }
    ok = true;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (!(rows[i].error < rows[i - 1].error)) ok = false;
    }
  } else {
    const IdentityId id = identity_or_throw(o.identity);
    if (id != IdentityId::Osler && id != IdentityId::ClassicalSumInt) {
      throw UsageError("limit supports osler, classical-sum-int and qgamma");
    }
    label = "eps";
    const double tol = tolerance(o, id);
    for (int k = 2; k <= 10; ++k) {
      const double eps = std::pow(10.0, -k);
      TruncationPolicy policy = kClassicalPolicy;
      policy.eps = eps;
      policy.max_terms = std::max(base.max_terms, kClassicalPolicy.max_terms);
      LimitRow row{eps, {}, {}, NAN, ""};
      try {
        if (id == IdentityId::Osler) {
          const OslerParams op{real_param(o, "a", std::nullopt), real_param(o, "b", 0.0),
                               real_param(o, "alpha", std::nullopt),
                               real_param(o, "theta", 0.0)};
          op.validate();
          row.lhs = osler_sum(op, policy).value;
          row.rhs = osler_closed_form(op);
        } else {
          const double l = real_param(o, "l", std::nullopt);
          if (l != std::round(l)) throw UsageError("--l must be an integer");
          const IdentityReport r =
              classical_sum_eq_integral(real_param(o, "a", std::nullopt),
                                        real_param(o, "alpha", std::nullopt),
                                        static_cast<int>(l), policy, std::max(tol, 10.0 * eps));
          row.lhs = r.lhs;
          row.rhs = r.rhs;
        }
        row.error = std::abs(row.lhs - row.rhs) / std::max(1.0, std::abs(row.rhs));
      } catch (const Error& e) {
        if (is_parameter_error(e.kind())) {
          err << "invalid-params: " << e.what() << '\n';
          return kExitInvalidParams;
        }
        row.status = std::string(to_string(e.kind()));
      }
      rows.push_back(row);
    }
    ok = rows.back().status.empty() && rows.back().error <= tol;
  }
  Sink sink(o.output, out);
  emit_rows(rows, label, o, *sink);
  return ok ? kExitPass : kExitFail;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  Sink sink(o.output, out);
  for (const auto& e : catalog()) {
    if (o.format == "text") {
      *sink << e.name << "\n  " << e.anchor << "\n  params: " << e.params
            << "\n  default tol: " << format_number(e.default_tol) << "\n";
    } else if (o.format == "csv") {
      *sink << e.name << ",\"" << e.anchor << "\",\"" << e.params << "\","
            << format_number(e.default_tol) << '\n';
    } else {
      *sink << "{\"identity\":\"" << e.name << "\",\"anchor\":\"" << e.anchor
            << "\",\"params\":\"" << e.params
            << "\",\"default_tol\":" << format_number(e.default_tol) << "}\n";
    }
  }
  return kExitPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qsinc: bilateral q-series sum-equals-integral verification"};
  app.require_subcommand(1);
  Options o;

  CLI::App* verify_cmd = app.add_subcommand("verify", "check one identity at one point");
  add_common(verify_cmd, o);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "check an identity over a grid or draws");
  add_common(sweep_cmd, o);
  sweep_cmd->add_option("--threads,-j", o.threads, "worker threads")->check(CLI::Range(1, 256));
  sweep_cmd->add_option("--draws", o.draws, "random points instead of a grid");
  sweep_cmd->add_option("--seed", o.seed, "seed for --draws");

  CLI::App* limit_cmd = app.add_subcommand("limit", "classical limit convergence table");
  add_common(limit_cmd, o);

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "list identities");
  catalog_cmd->add_option("--format,-f", o.format)->check(CLI::IsMember({"json", "csv", "text"}));
  catalog_cmd->add_option("--output,-o", o.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    for (const CLI::App* sub : app.get_subcommands()) err << sub->help();
    return kExitUsage;
  }

  try {
    if (*verify_cmd) return cmd_verify(o, out, err);
    if (*sweep_cmd) return cmd_sweep(o, out, err);
    if (*limit_cmd) return cmd_limit(o, out, err);
    return cmd_catalog(o, out);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    err << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace qsinc::cli
