#include "fibcat/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>

namespace fibcat {

namespace {
std::atomic<bool> g_timings{false};
}

void set_record_timings(bool on) noexcept { g_timings = on; }
bool record_timings() noexcept { return g_timings; }

std::string_view to_string(Status s) noexcept {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::vacuous: return "vacuous";
    }
    return "?";
}

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::fail; }));
}

void Report::append(Report other) {
    for (auto& c : other.checks) checks.push_back(std::move(c));
}

void Report::run(std::string id, std::string anchor, const std::function<std::optional<std::string>()>& body) {
    Check c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    const auto start = std::chrono::steady_clock::now();
    try {
        if (auto w = body()) {
            c.status = Status::fail;
            c.witnesses.push_back(std::move(*w));
        }
    } catch (const std::exception& e) {
        c.status = Status::fail;
        c.witnesses.push_back(e.what());
    }
    if (record_timings())
        c.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    checks.push_back(std::move(c));
}

void Report::vacuous(std::string id, std::string anchor, std::string note) {
    Check c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    c.status = Status::vacuous;
    c.witnesses.push_back(std::move(note));
    checks.push_back(std::move(c));
}

void Report::sort() {
    std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
}

}  // namespace fibcat
