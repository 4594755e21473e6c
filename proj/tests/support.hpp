#pragma once

#include <cmath>
#include <random>

#include "cesolve/cesolve.hpp"

namespace testing {

inline std::mt19937_64 rng(unsigned long long seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

// reference couplings (A = 10.25, B = 12.5) and a set with exactly two levels
inline const cesolve::DkvParams fig1{10.25, 12.5};
inline const cesolve::DkvParams two_level{30.0, 32.0};

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

} // namespace testing
