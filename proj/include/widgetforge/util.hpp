#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace wf {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

inline std::uint64_t fnv1a64(std::string_view s, std::uint64_t h = kFnvOffset)
{
    for (unsigned char c : s) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

// Compact decimal rendering for CSS and SVG: integers without a fraction,
// everything else with up to six decimals, trailing zeros trimmed.
inline std::string format_number(double v)
{
    if (!std::isfinite(v))
        return "0";
    if (v == 0.0)
        v = 0.0; // normalize -0
    double r = std::round(v);
    if (std::abs(v - r) < 1e-9 && std::abs(r) < 9.0e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(r));
        return buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s = buf;
    while (!s.empty() && s.back() == '0')
        s.pop_back();
    if (!s.empty() && s.back() == '.')
        s.pop_back();
    return s;
}

} // namespace wf
