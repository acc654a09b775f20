#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qsinc/report.hpp"
#include "qsinc/sweep.hpp"

namespace qsinc {

/// %.17g; non-finite values become "null" in JSON and "nan"/"inf" in CSV.
std::string format_number(double v);

/// One-line JSON object with a fixed key order. elapsed_ms is written as 0
/// unless `timing` is set, so reruns are byte-identical.
std::string to_json(const IdentityReport& report, bool timing = false);

/// Inverse of to_json. Diagnostics come back folded into lhs_diag.
IdentityReport report_from_json(std::string_view text);

std::string summary_json(const SweepSummary& summary);

/// Sorted union of parameter keys, the CSV parameter columns.
std::vector<std::string> param_columns(const std::vector<IdentityReport>& reports);
std::string csv_header(const std::vector<std::string>& columns);
std::string to_csv_row(const IdentityReport& report, const std::vector<std::string>& columns,
                       bool timing = false);

/// Multi-line human-readable rendering.
std::string to_text(const IdentityReport& report, bool timing = false);

}  // namespace qsinc
