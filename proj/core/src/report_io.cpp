#include "qsinc/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "json.hpp"
#include "qsinc/error.hpp"
#include "qsinc/identities.hpp"

namespace qsinc {

namespace {

using nlohmann::json;

std::string num(double v) { return std::isfinite(v) ? format_number(v) : "null"; }

std::string json_string(std::string_view s) { return json(std::string(s)).dump(); }

std::string complex_json(Complex z) {
  return "{\"re\":" + num(z.real()) + ",\"im\":" + num(z.imag()) + "}";
}

std::string param_text(Complex v) {
  if (v.imag() == 0.0) return format_number(v.real());
  std::string im = format_number(v.imag());
  if (im.front() != '-') im.insert(0, "+");
  return format_number(v.real()) + im + "i";
}

double number_or_nan(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

Complex complex_from(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  return {number_or_nan(j.at("re")), number_or_nan(j.at("im"))};
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_json(const IdentityReport& r, bool timing) {
  std::string out = "{\"identity\":" + json_string(to_string(r.id)) + ",\"params\":{";
  bool first = true;
  for (const auto& [key, value] : r.params) {
    if (!first) out += ',';
    first = false;
    out += json_string(key) + ':' + (value.imag() == 0.0 ? num(value.real()) : complex_json(value));
  }
  out += "},\"lhs\":" + complex_json(r.lhs);
  out += ",\"rhs\":" + complex_json(r.rhs);
  out += ",\"abs_err\":" + num(r.abs_err);
  out += ",\"rel_err\":" + num(r.rel_err);
  out += ",\"tol\":" + num(r.tol);
  out += std::string(",\"pass\":") + (r.pass ? "true" : "false");
  out += ",\"diagnostics\":{\"lhs_terms\":" + std::to_string(r.lhs_diag.terms);
  out += ",\"rhs_nodes\":" + std::to_string(r.rhs_diag.terms);
  out += ",\"tail_estimate\":" +
         num(std::max(r.lhs_diag.tail_estimate, r.rhs_diag.tail_estimate));
  out += ",\"error_estimate\":" +
         num(std::max(r.lhs_diag.error_estimate, r.rhs_diag.error_estimate)) + '}';
  out += ",\"elapsed_ms\":" + num(timing ? r.elapsed_ms : 0.0);
  out += ",\"status\":" + json_string(to_string(r.status));
  out += ",\"reason\":" + json_string(r.reason) + '}';
  return out;
}

IdentityReport report_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidParams, std::string("malformed report: ") + e.what());
  }
  try {
    IdentityReport r;
    const auto id = identity_from_name(j.at("identity").get<std::string>());
    if (!id) fail(ErrorKind::InvalidParams, "unknown identity in report");
    r.id = *id;
    for (const auto& [key, value] : j.at("params").items()) r.params[key] = complex_from(value);
    r.lhs = complex_from(j.at("lhs"));
    r.rhs = complex_from(j.at("rhs"));
    r.abs_err = number_or_nan(j.at("abs_err"));
    r.rel_err = number_or_nan(j.at("rel_err"));
    r.tol = number_or_nan(j.at("tol"));
    r.pass = j.at("pass").get<bool>();
    const json& d = j.at("diagnostics");
    r.lhs_diag.terms = d.at("lhs_terms").get<long>();
    r.rhs_diag.terms = d.at("rhs_nodes").get<long>();
    r.lhs_diag.tail_estimate = number_or_nan(d.at("tail_estimate"));
    r.lhs_diag.error_estimate = number_or_nan(d.at("error_estimate"));
    r.elapsed_ms = number_or_nan(j.at("elapsed_ms"));
    const std::string status = j.value("status", "ok");
    r.status = status == "invalid-params" ? ReportStatus::InvalidParams
               : status == "inconclusive" ? ReportStatus::Inconclusive
                                          : ReportStatus::Ok;
    r.reason = j.value("reason", "");
    return r;
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidParams, std::string("malformed report: ") + e.what());
  }
}

std::string summary_json(const SweepSummary& s) {
  return "{\"summary\":{\"total\":" + std::to_string(s.total) +
         ",\"passed\":" + std::to_string(s.passed) + ",\"max_rel_err\":" + num(s.max_rel_err) +
         "}}";
}

std::vector<std::string> param_columns(const std::vector<IdentityReport>& reports) {
  std::set<std::string> keys;
  for (const auto& r : reports) {
    for (const auto& [key, value] : r.params) keys.insert(key);
  }
  return {keys.begin(), keys.end()};
}

std::string csv_header(const std::vector<std::string>& columns) {
  std::string out = "identity";
  for (const auto& c : columns) out += ',' + c;
  out += ",lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass,elapsed_ms";
  return out;
}

std::string to_csv_row(const IdentityReport& r, const std::vector<std::string>& columns,
                       bool timing) {
  std::string out(to_string(r.id));
  for (const auto& c : columns) {
    out += ',';
    const auto it = r.params.find(c);
    if (it != r.params.end()) out += param_text(it->second);
  }
  for (double v : {r.lhs.real(), r.lhs.imag(), r.rhs.real(), r.rhs.imag(), r.abs_err,
                   r.rel_err}) {
    out += ',' + format_number(v);
  }
  out += r.pass ? ",true," : ",false,";
  out += format_number(timing ? r.elapsed_ms : 0.0);
  return out;
}

std::string to_text(const IdentityReport& r, bool timing) {
  std::string out = "identity  " + std::string(to_string(r.id)) + "\nparams   ";
  for (const auto& [key, value] : r.params) out += ' ' + key + '=' + param_text(value);
  out += "\nlhs       " + param_text(r.lhs);
  out += "\nrhs       " + param_text(r.rhs);
  out += "\nabs_err   " + format_number(r.abs_err);
  out += "\nrel_err   " + format_number(r.rel_err);
  out += "\ntol       " + format_number(r.tol);
  out += std::string("\npass      ") + (r.pass ? "yes" : "no");
  out += "\nstatus    " + std::string(to_string(r.status));
  if (!r.reason.empty()) out += "\nreason    " + r.reason;
  out += "\nwork      lhs " + std::to_string(r.lhs_diag.terms) + ", rhs " +
         std::to_string(r.rhs_diag.terms);
  if (timing) out += "\nelapsed   " + format_number(r.elapsed_ms) + " ms";
  out += '\n';
  return out;
}

}  // namespace qsinc
