#pragma once

#include "munits/cyclotomic.hpp"
#include "munits/rational.hpp"

namespace munits::detail {

inline bool fe_is_zero(const Rational& x) { return x == 0; }
inline bool fe_is_zero(const CyclotomicNumber& x) { return x.is_zero(); }

inline bool fe_is_one(const Rational& x) { return x == 1; }
inline bool fe_is_one(const CyclotomicNumber& x) { return x == 1; }

inline Rational fe_inverse(const Rational& x) {
    if (x == 0) throw division_by_zero_error();
    return Rational(1) / x;
}
inline CyclotomicNumber fe_inverse(const CyclotomicNumber& x) { return x.inverse(); }

// scalar multiplication by a rational, defined for both coefficient types
inline Rational fe_scale(const Rational& x, const Rational& s) { return x * s; }
inline CyclotomicNumber fe_scale(const CyclotomicNumber& x, const Rational& s) { return x * s; }

}  // namespace munits::detail
