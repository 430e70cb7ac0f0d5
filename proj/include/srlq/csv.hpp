#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace srlq::csv {

// Fixed numeric formatting so repeated runs emit byte-identical files.
inline std::string format(double value) {
    if (std::isnan(value)) return "nan";
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

}  // namespace srlq::csv
