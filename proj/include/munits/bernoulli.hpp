#pragma once

#include <cstdint>

#include "munits/rational.hpp"

namespace munits {

// Periodized second Bernoulli polynomial B(x) = y^2 - y + 1/6 with y the
// fractional part of x. Even around 0 and 1/2, decreasing on [0, 1/2],
// and it controls every cusp order in this library.
inline Rational bernoulli_B(const Rational& x) {
    Rational y = frac_part(x);
    return y * y - y + make_rational(1, 6);
}

// 6*t^2 * B(y/t) for integers 0 <= y < t: an exact integer, the form used in
// the hot search loops.  B(y/t) = (6y^2 - 6yt + t^2) / (6t^2).
inline std::int64_t bernoulli_scaled(std::int64_t y, std::int64_t t) {
    return 6 * y * y - 6 * y * t + t * t;
}

}  // namespace munits
