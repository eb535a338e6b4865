#pragma once

#include <limits>
#include <cmath>

namespace coarsekit {

/// Extended non-negative reals; +inf is a first-class value.
constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool is_finite(double v) { return std::isfinite(v); }

} // namespace coarsekit
