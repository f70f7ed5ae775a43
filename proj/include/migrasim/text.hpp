#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace migrasim {

/// Shortest decimal representation that round-trips to the same double.
inline std::string shortest(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

inline std::string shortest(long long x) { return std::to_string(x); }

} // namespace migrasim
