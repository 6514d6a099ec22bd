#pragma once

#include <string>

#include "verify.hpp"

namespace ffgroup {

/// Report as a JSON object with the fixed key set {harness, params, cases_total,
/// cases_checked, failures, elapsed_ms, budget_hit, tool_version}; group orders
/// and other potentially large integers travel as decimal strings.
std::string report_json(const Report& rep, int indent = 2);

std::string report_csv_header();
std::string report_csv_row(const Report& rep);

std::string report_text(const Report& rep);

}  // namespace ffgroup
