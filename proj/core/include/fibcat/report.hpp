#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fibcat {

enum class Status { pass, fail, vacuous };

std::string_view to_string(Status s) noexcept;

/// Outcome of one law checked on one instance.
struct Check {
    std::string id;
    std::string anchor;  // the law being checked, in words
    Status status = Status::pass;
    std::vector<std::string> witnesses;
    double millis = 0;
};

struct Report {
    std::vector<Check> checks;

    bool ok() const;
    std::size_t failures() const;
    void append(Report other);
    /// Runs `body`; a returned string is a failure witness, an exception is a
    /// failure carrying its message.
    void run(std::string id, std::string anchor, const std::function<std::optional<std::string>()>& body);
    void vacuous(std::string id, std::string anchor, std::string note);
    /// Checks sorted by id; stable for equal ids.
    void sort();
};

/// Whether timings are recorded into Check::millis (off by default so reports
/// are byte-stable).
void set_record_timings(bool on) noexcept;
bool record_timings() noexcept;

}  // namespace fibcat
