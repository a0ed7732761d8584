#pragma once

#include <string_view>

namespace monomialis {

/// Engine identifier; part of every cache key so that stale entries from a
/// different build are never served.
inline constexpr std::string_view kEngineVersion = "monomialis/0.1.0";

} // namespace monomialis
