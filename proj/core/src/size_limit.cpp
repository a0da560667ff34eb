#include "fibcat/size_limit.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <string>

#include "fibcat/error.hpp"

namespace fibcat {

namespace {

std::optional<std::size_t> parse_count(std::string_view s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0) return std::nullopt;
    return v;
}

SizeLimit initial_limit() {
    if (const char* env = std::getenv("FIBCAT_SIZE_LIMIT"))
        if (auto parsed = parse_size_limit(env)) return *parsed;
    return SizeLimit{};
}

std::atomic<std::size_t>& objects_slot() {
    static std::atomic<std::size_t> v{initial_limit().max_objects};
    return v;
}

std::atomic<std::size_t>& morphisms_slot() {
    static std::atomic<std::size_t> v{initial_limit().max_morphisms};
    return v;
}

}  // namespace

std::optional<SizeLimit> parse_size_limit(std::string_view text) noexcept {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) {
        auto n = parse_count(text);
        if (!n) return std::nullopt;
        return SizeLimit{*n, *n * 8};
    }
    auto objects = parse_count(text.substr(0, comma));
    auto morphisms = parse_count(text.substr(comma + 1));
    if (!objects || !morphisms) return std::nullopt;
    return SizeLimit{*objects, *morphisms};
}

SizeLimit size_limit() noexcept { return SizeLimit{objects_slot().load(), morphisms_slot().load()}; }

void set_size_limit(SizeLimit limit) noexcept {
    objects_slot().store(limit.max_objects);
    morphisms_slot().store(limit.max_morphisms);
}

void check_size(std::size_t objects, std::size_t morphisms, std::string_view what) {
    const SizeLimit lim = size_limit();
    if (objects > lim.max_objects || morphisms > lim.max_morphisms)
        throw Error(ErrorCode::SizeExceeded,
                    std::string(what) + " needs " + std::to_string(objects) + " objects / " +
                        std::to_string(morphisms) + " morphisms (limit " +
                        std::to_string(lim.max_objects) + " / " +
                        std::to_string(lim.max_morphisms) + ")");
}

}  // namespace fibcat
