#pragma once

#include <string>

namespace digitblocks {

/// Shortest round-trip-free rendering with `digits` significant digits
/// (printf %.{digits}g semantics, locale independent).
std::string format_number(double x, int digits = 12);

}  // namespace digitblocks
