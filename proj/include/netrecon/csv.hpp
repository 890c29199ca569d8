#pragma once

#include <cstdio>
#include <string>

namespace netrecon {

// Fixed-format double rendering so repeated runs emit byte-identical CSVs.
inline std::string format_double(double v, int significant_digits = 12) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, v);
    return buf;
}

} // namespace netrecon
