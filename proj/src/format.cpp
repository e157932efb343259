#include "qbell/format.hpp"

#include <cstdio>

namespace qbell {

std::string fmt12(double v) {
    if (v == 0.0) {
        v = 0.0; // normalize -0
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace qbell
