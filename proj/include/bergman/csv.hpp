#pragma once

#include <cstdio>
#include <string>

namespace bergman {

// shortest representation that round-trips a double
inline std::string csv_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace bergman
