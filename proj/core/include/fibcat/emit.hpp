#pragma once

#include <string>

#include "fibcat/report.hpp"

namespace fibcat {

enum class ReportFormat { json, text };

/// {"version":1,"checks":[{"id","paper_anchor","status","witnesses","millis"}]}
/// in that key order, checks sorted by id, or a line per check for `text`.
/// Identical reports give identical bytes.
std::string emit_report(const Report& report, ReportFormat format);

/// Throws UnknownReference.
ReportFormat parse_format(const std::string& s);

}  // namespace fibcat
