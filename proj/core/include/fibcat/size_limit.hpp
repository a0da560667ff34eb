#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace fibcat {

/// Hard bound on the size of any category the engine builds.
struct SizeLimit {
    std::size_t max_objects = 64;
    std::size_t max_morphisms = 512;
};

/// Current process-wide limit. On first use it is seeded from the
/// FIBCAT_SIZE_LIMIT environment variable when set (`N` or `OBJECTS,MORPHISMS`).
SizeLimit size_limit() noexcept;
void set_size_limit(SizeLimit limit) noexcept;

/// Parses `N` (objects N, morphisms 8N) or `OBJECTS,MORPHISMS`.
std::optional<SizeLimit> parse_size_limit(std::string_view text) noexcept;

/// Throws Error(SizeExceeded) when the counts exceed the current limit.
void check_size(std::size_t objects, std::size_t morphisms, std::string_view what);

class ScopedSizeLimit {
public:
    explicit ScopedSizeLimit(SizeLimit limit) : saved_(size_limit()) { set_size_limit(limit); }
    ~ScopedSizeLimit() { set_size_limit(saved_); }
    ScopedSizeLimit(const ScopedSizeLimit&) = delete;
    ScopedSizeLimit& operator=(const ScopedSizeLimit&) = delete;

private:
    SizeLimit saved_;
};

}  // namespace fibcat
