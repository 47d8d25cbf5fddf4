#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace manip::csv {

/// 17 significant digits; non-finite values print as NaN.
inline std::string number(double x) {
    if (!std::isfinite(x)) return "NaN";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace manip::csv
