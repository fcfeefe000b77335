#pragma once

#include <cstdint>

#include "coverkit/rational.hpp"

namespace coverkit {

/// C(n, k) as an exact integer. Any negative argument or k > n yields 0,
/// which is what the alternating coverage sums rely on.
BigInt binomial(std::int64_t n, std::int64_t k);

/// H_n = 1 + 1/2 + ... + 1/n as an exact rational; H_0 = 0. Memoized and
/// safe to call from several threads.
Rational harmonic(std::int64_t n);

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

}  // namespace coverkit
