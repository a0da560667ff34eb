#include "fibcat/emit.hpp"

#include <cmath>
#include <sstream>

#include "fibcat/error.hpp"
#include "json.hpp"

namespace fibcat {

namespace {

std::string json_report(const Report& r) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json j;
        j["id"] = c.id;
        j["paper_anchor"] = c.anchor;
        j["status"] = std::string(to_string(c.status));
        j["witnesses"] = c.witnesses;
        // whole microseconds keep the output stable across platforms
        if (c.millis == 0)
            j["millis"] = 0;
        else
            j["millis"] = std::round(c.millis * 1000.0) / 1000.0;
        checks.push_back(std::move(j));
    }
    nlohmann::ordered_json doc;
    doc["version"] = 1;
    doc["checks"] = std::move(checks);
    return doc.dump();
}

std::string text_report(const Report& r) {
    std::ostringstream os;
    std::size_t pass = 0, fail = 0, vac = 0;
    for (const auto& c : r.checks) {
        const char* tag = c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "VACUOUS";
        (c.status == Status::pass ? pass : c.status == Status::fail ? fail : vac)++;
        os << tag << "  " << c.id;
        if (c.millis > 0) os << "  (" << c.millis << " ms)";
        os << "\n";
        for (const auto& w : c.witnesses) os << "      " << w << "\n";
    }
    os << r.checks.size() << " checks: " << pass << " passed, " << fail << " failed, " << vac << " vacuous\n";
    return os.str();
}

}  // namespace

std::string emit_report(const Report& report, ReportFormat format) {
    Report sorted = report;
    sorted.sort();
    return format == ReportFormat::json ? json_report(sorted) : text_report(sorted);
}

ReportFormat parse_format(const std::string& s) {
    if (s == "json") return ReportFormat::json;
    if (s == "text") return ReportFormat::text;
    throw Error(ErrorCode::UnknownReference, "unknown format '" + s + "' (json, text)");
}

}  // namespace fibcat
