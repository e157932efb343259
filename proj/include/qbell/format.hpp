#pragma once

#include <string>

namespace qbell {

/// Fixed 12-significant-digit rendering, identical on every platform, so
/// output files are stable golden-test targets.
std::string fmt12(double v);

} // namespace qbell
