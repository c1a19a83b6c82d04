#pragma once

#include <complex>
#include <numbers>

namespace scatter1d {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

}  // namespace scatter1d
