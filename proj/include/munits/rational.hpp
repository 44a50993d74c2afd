#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace munits {

// Exact rational numbers. GMP keeps them reduced with positive denominator,
// which is exactly the invariant we need everywhere.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer floor_int(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

// Fractional part in [0, 1).
inline Rational frac_part(const Rational& x) {
    return x - Rational(floor_int(x));
}

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

inline long to_long(const Integer& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("integer does not fit in long");
    return x.get_si();
}

inline Rational pow_rational(const Rational& x, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (x == 0) throw std::domain_error("zero to a negative power");
        return pow_rational(Rational(1) / x, -e);
    }
    Rational acc(1), base(x);
    long k = e;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

// Canonical textual form: "p" or "p/q".
inline std::string rational_str(const Rational& x) {
    if (is_integral(x)) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("cannot parse rational: " + s);
    r.canonicalize();
    return r;
}

inline long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return std::lcm(a, b);
}

inline long gcd_long(long a, long b) { return std::gcd(a, b); }

}  // namespace munits
