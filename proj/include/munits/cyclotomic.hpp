#pragma once

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "munits/rational.hpp"

namespace munits {

struct division_by_zero_error : std::domain_error {
    division_by_zero_error() : std::domain_error("division by zero") {}
};

namespace detail {

// Exact division of integer polynomials, used to build cyclotomic moduli:
// requires the divisor to be monic and the division to be exact.
inline std::vector<Integer> poly_div_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    if (den.empty() || den.back() != 1) throw std::invalid_argument("divisor must be monic");
    if (num.size() < den.size()) throw std::invalid_argument("inexact polynomial division");
    std::vector<Integer> quot(num.size() - den.size() + 1);
    for (std::size_t i = quot.size(); i-- > 0;) {
        Integer c = num[i + den.size() - 1];
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::invalid_argument("inexact polynomial division");
    return quot;
}

}  // namespace detail

// Coefficients of the m-th cyclotomic polynomial, ascending degree, monic,
// degree phi(m).  Computed as (x^m - 1) / prod_{d|m, d<m} Phi_d.
inline std::vector<Integer> cyclotomic_polynomial(long m) {
    if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");
    if (m == 1) return {Integer(-1), Integer(1)};
    std::vector<Integer> num(m + 1);
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        num = detail::poly_div_exact(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

inline long euler_phi(long m) {
    long result = m, n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

/// The field Q(zeta_m) in the power basis 1, zeta, ..., zeta^(phi(m)-1)
/// modulo Phi_m.  Instances are shared and immutable; use get().
class CyclotomicField {
  public:
    static std::shared_ptr<const CyclotomicField> get(long m) {
        static std::mutex mu;
        static std::map<long, std::shared_ptr<const CyclotomicField>> registry;
        std::lock_guard<std::mutex> lock(mu);
        auto it = registry.find(m);
        if (it != registry.end()) return it->second;
        auto field = std::shared_ptr<const CyclotomicField>(new CyclotomicField(m));
        registry.emplace(m, field);
        return field;
    }

    long order() const { return m_; }
    long degree() const { return phi_; }
    const std::vector<Integer>& modulus() const { return modulus_; }

    // x^(degree + k) reduced modulo Phi_m, as integer coordinate rows.
    const std::vector<Integer>& power_reduction(long k) const { return reductions_.at(k); }

  private:
    explicit CyclotomicField(long m) : m_(m), modulus_(cyclotomic_polynomial(m)) {
        phi_ = static_cast<long>(modulus_.size()) - 1;
        // Rows for x^(phi..max_deg); products of reduced elements reach degree
        // 2*phi-2 and group-ring conversions reach degree m-1.
        long max_deg = std::max(2 * phi_ - 2, m_ - 1);
        std::vector<Integer> cur(phi_);
        for (long j = 0; j < phi_; ++j) cur[j] = -modulus_[j];
        for (long d = phi_; d <= max_deg; ++d) {
            reductions_.push_back(cur);
            // multiply by x and reduce the overflow term
            Integer top = cur[phi_ - 1];
            for (long j = phi_ - 1; j > 0; --j) cur[j] = cur[j - 1];
            cur[0] = 0;
            if (top != 0)
                for (long j = 0; j < phi_; ++j) cur[j] += top * (-modulus_[j]);
        }
    }

    long m_;
    long phi_;
    std::vector<Integer> modulus_;
    std::vector<std::vector<Integer>> reductions_;
};

/// Element of Q(zeta_m): phi(m) rational coordinates in the power basis.
class CyclotomicNumber {
  public:
    CyclotomicNumber() = default;

    CyclotomicNumber(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coords)
        : field_(std::move(field)), coords_(std::move(coords)) {
        if (static_cast<long>(coords_.size()) != field_->degree())
            throw std::invalid_argument("coordinate length must equal field degree");
    }

    static CyclotomicNumber zero(std::shared_ptr<const CyclotomicField> field) {
        return CyclotomicNumber(std::move(field), {});
    }

    static CyclotomicNumber from_rational(std::shared_ptr<const CyclotomicField> field, const Rational& x) {
        std::vector<Rational> c(field->degree());
        c[0] = x;
        return CyclotomicNumber(std::move(field), std::move(c));
    }

    static CyclotomicNumber one(std::shared_ptr<const CyclotomicField> field) {
        return from_rational(std::move(field), Rational(1));
    }

    // zeta_m^k
    static CyclotomicNumber zeta_power(std::shared_ptr<const CyclotomicField> field, long k) {
        long m = field->order();
        k %= m;
        if (k < 0) k += m;
        std::vector<Rational> poly(k + 1);
        poly[k] = 1;
        return from_polynomial(std::move(field), poly);
    }

    // Arbitrary-degree polynomial in zeta, reduced modulo Phi_m.
    static CyclotomicNumber from_polynomial(std::shared_ptr<const CyclotomicField> field,
                                            const std::vector<Rational>& poly) {
        long phi = field->degree();
        std::vector<Rational> c(phi);
        for (std::size_t d = 0; d < poly.size(); ++d) {
            if (poly[d] == 0) continue;
            if (static_cast<long>(d) < phi) {
                c[d] += poly[d];
            } else {
                const auto& row = field->power_reduction(static_cast<long>(d) - phi);
                for (long j = 0; j < phi; ++j)
                    if (row[j] != 0) c[j] += poly[d] * Rational(row[j]);
            }
        }
        return CyclotomicNumber(std::move(field), std::move(c));
    }

    const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
    long order() const { return field_->order(); }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const {
        if (coords_.empty()) return true;
        for (const auto& c : coords_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t j = 1; j < coords_.size(); ++j)
            if (coords_[j] != 0) return false;
        return true;
    }

    // Only valid when is_rational().
    Rational rational_part() const {
        if (!is_rational()) throw std::domain_error("not a rational element");
        return coords_.empty() ? Rational(0) : coords_[0];
    }

    friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        if (!a.field_) return b;  // default-constructed values act as a universal zero
        if (!b.field_) return a;
        a.check_same_field(b);
        if (a.coords_.empty()) return b;
        if (b.coords_.empty()) return a;
        std::vector<Rational> c(a.coords_);
        for (std::size_t j = 0; j < c.size(); ++j) c[j] += b.coords_[j];
        return CyclotomicNumber(a.field_, std::move(c));
    }

    friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        if (!b.field_) return a;
        if (!a.field_) return -b;
        a.check_same_field(b);
        if (b.coords_.empty()) return a;
        std::vector<Rational> c = a.coords_.empty() ? std::vector<Rational>(a.field_->degree()) : a.coords_;
        for (std::size_t j = 0; j < c.size(); ++j) c[j] -= b.coords_[j];
        return CyclotomicNumber(a.field_, std::move(c));
    }

    CyclotomicNumber operator-() const {
        std::vector<Rational> c(coords_);
        for (auto& x : c) x = -x;
        return CyclotomicNumber(field_, std::move(c));
    }

    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        if (!a.field_) return a;
        if (!b.field_) return b;
        a.check_same_field(b);
        long phi = a.field_->degree();
        if (a.is_zero() || b.is_zero()) return zero(a.field_);
        std::vector<Rational> prod(2 * phi - 1);
        for (long i = 0; i < phi; ++i) {
            if (a.coords_[i] == 0) continue;
            for (long j = 0; j < phi; ++j) {
                if (b.coords_[j] == 0) continue;
                prod[i + j] += a.coords_[i] * b.coords_[j];
            }
        }
        return from_polynomial(a.field_, prod);
    }

    CyclotomicNumber& operator+=(const CyclotomicNumber& b) { return *this = *this + b; }
    CyclotomicNumber& operator-=(const CyclotomicNumber& b) { return *this = *this - b; }
    CyclotomicNumber& operator*=(const CyclotomicNumber& b) { return *this = *this * b; }

    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const Rational& s) {
        if (!a.field_) return a;
        if (s == 0) return zero(a.field_);
        std::vector<Rational> c(a.coords_);
        for (auto& x : c) x *= s;
        return CyclotomicNumber(a.field_, std::move(c));
    }
    friend CyclotomicNumber operator*(const Rational& s, const CyclotomicNumber& a) { return a * s; }

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        if (a.coords_.empty() || b.coords_.empty()) {
            return (a.coords_.empty() ? true : a.is_zero()) && (b.coords_.empty() ? true : b.is_zero());
        }
        a.check_same_field(b);
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

    bool operator==(long v) const {
        if (coords_.empty()) return v == 0;
        if (coords_[0] != v) return false;
        for (std::size_t j = 1; j < coords_.size(); ++j)
            if (coords_[j] != 0) return false;
        return true;
    }

    // Multiplicative inverse via the extended Euclidean algorithm against
    // Phi_m in Q[x].
    CyclotomicNumber inverse() const {
        if (is_zero()) throw division_by_zero_error();
        using Poly = std::vector<Rational>;
        auto deg = [](const Poly& p) {
            for (std::size_t i = p.size(); i-- > 0;)
                if (p[i] != 0) return static_cast<long>(i);
            return -1L;
        };
        Poly r0(field_->modulus().size());
        for (std::size_t i = 0; i < r0.size(); ++i) r0[i] = Rational(field_->modulus()[i]);
        Poly r1(coords_.begin(), coords_.end());
        Poly s0{Rational(0)}, s1{Rational(1)};  // coefficients of the input polynomial
        while (deg(r1) > 0) {
            // divide r0 by r1
            Poly rem = r0, quot(std::max<long>(deg(r0) - deg(r1) + 1, 1));
            long d1 = deg(r1);
            Rational lead = r1[d1];
            for (long d = deg(rem); d >= d1; --d) {
                if (rem[d] == 0) continue;
                Rational c = rem[d] / lead;
                quot[d - d1] = c;
                for (long j = 0; j <= d1; ++j) rem[d - d1 + j] -= c * r1[j];
            }
            // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - quot*s1)
            Poly s2(std::max(s0.size(), quot.size() + s1.size()));
            for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
            for (std::size_t i = 0; i < quot.size(); ++i) {
                if (quot[i] == 0) continue;
                for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= quot[i] * s1[j];
            }
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        long d = deg(r1);
        if (d != 0) throw std::logic_error("cyclotomic gcd degenerated");  // Phi_m is irreducible
        Rational g = r1[d];
        for (auto& c : s1) c /= g;
        return from_polynomial(field_, s1);
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (std::size_t j = 0; j < coords_.size(); ++j) {
            if (coords_[j] == 0) continue;
            if (!first) out += " + ";
            out += rational_str(coords_[j]);
            if (j >= 1) out += "*z" + std::to_string(field_->order()) + "^" + std::to_string(j);
            first = false;
        }
        return out;
    }

  private:
    void check_same_field(const CyclotomicNumber& b) const {
        if (!field_ || !b.field_ || field_->order() != b.field_->order())
            throw std::invalid_argument("cyclotomic numbers from different fields");
    }

    std::shared_ptr<const CyclotomicField> field_;
    std::vector<Rational> coords_;
};

// zeta |-> zeta^y extended linearly; requires gcd(y, m) = 1.
inline CyclotomicNumber galois_apply(long y, const CyclotomicNumber& a) {
    long m = a.order();
    long yy = y % m;
    if (yy < 0) yy += m;
    if (std::gcd(yy, m) != 1) throw std::invalid_argument("galois exponent not coprime to the order");
    std::vector<Rational> poly(m);
    const auto& c = a.coords();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        poly[(j * static_cast<std::size_t>(yy)) % static_cast<std::size_t>(m)] += c[j];
    }
    return CyclotomicNumber::from_polynomial(a.field(), poly);
}

// Numeric embedding zeta_m |-> exp(2*pi*i/m).
inline std::complex<double> numeric_embed(const CyclotomicNumber& a) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    std::complex<double> acc(0.0, 0.0);
    long m = a.order();
    const auto& c = a.coords();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        double arg = two_pi * static_cast<double>(j) / static_cast<double>(m);
        acc += c[j].get_d() * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return acc;
}

}  // namespace munits
