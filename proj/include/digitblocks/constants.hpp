#pragma once

// Reference constants, 30 significant digits.

namespace digitblocks::constants {

inline constexpr double kEulerGamma = 0.577215664901532860606512090082;
inline constexpr double kLog2 = 0.693147180559945309417232121458;
inline constexpr double kLogPi = 1.14472988584940017414342735135;
inline constexpr double kPi = 3.14159265358979323846264338328;
inline constexpr double kHalfLog2Pi = 0.918938533204672741780329736406;

}  // namespace digitblocks::constants
