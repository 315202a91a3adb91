#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace hfi {

// Shortest round-trip decimal form; the single formatter used everywhere a
// double becomes text (reports, notes, cache keys) so outputs are
// reproducible byte for byte.
inline std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, p);
}

}  // namespace hfi
