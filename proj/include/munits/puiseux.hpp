#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "munits/field_ops.hpp"
#include "munits/rational.hpp"

namespace munits {

struct insufficient_precision_error : std::runtime_error {
    explicit insufficient_precision_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

template <class F>
F one_like(const F& proto);
template <>
inline Rational one_like<Rational>(const Rational&) {
    return Rational(1);
}
template <>
inline CyclotomicNumber one_like<CyclotomicNumber>(const CyclotomicNumber& proto) {
    return CyclotomicNumber::one(proto.field());
}

template <class F>
F zero_like(const F& proto) {
    return proto - proto;
}

}  // namespace detail

/// Truncated series with exponents on the lattice (1/d)*Z, the carrier of
/// every q-expansion in this library.
///
/// Stored data is (d, lead, coeffs, prec): coeffs[i] holds the coefficient of
/// q^((lead+i)/d), and every coefficient at exponents strictly below
/// (lead+prec)/d is known (absent ones are exactly zero).  A nonzero series
/// keeps coeffs[0] != 0; the zero series is the canonical empty form with
/// lead = 0.  All operations return fresh normalized values; the lattice
/// denominator is minimized whenever support and knowledge bound allow it.
template <class F>
class PuiseuxSeries {
  public:
    PuiseuxSeries() : d_(1), lead_(0), prec_(0) {}

    PuiseuxSeries(long d, std::int64_t lead, std::vector<F> coeffs, std::int64_t prec)
        : d_(d), lead_(lead), coeffs_(std::move(coeffs)), prec_(prec) {
        if (d_ < 1) throw std::invalid_argument("lattice denominator must be positive");
        if (prec_ < static_cast<std::int64_t>(coeffs_.size()))
            throw std::invalid_argument("prec below stored coefficient range");
        normalize();
    }

    // the zero series known to vanish below bound_num/d
    static PuiseuxSeries zero(std::int64_t bound_num = 0, long d = 1) {
        PuiseuxSeries s;
        s.d_ = d;
        s.lead_ = bound_num;
        s.prec_ = 0;
        s.normalize();
        return s;
    }

    static PuiseuxSeries constant(const F& c, std::int64_t prec) {
        return PuiseuxSeries(1, 0, std::vector<F>{c}, prec);
    }

    long lattice_den() const { return d_; }
    std::int64_t lead_num() const { return lead_; }
    std::int64_t prec_steps() const { return prec_; }
    const std::vector<F>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational leading_exponent() const {
        if (is_zero()) throw std::domain_error("zero series has no leading exponent");
        return make_rational(lead_, d_);
    }

    const F& leading_coefficient() const {
        if (is_zero()) throw std::domain_error("zero series has no leading coefficient");
        return coeffs_.front();
    }

    // knowledge bound: all coefficients at exponents < bound are known
    Rational precision_bound() const { return make_rational(lead_ + prec_, d_); }

    // Exact coefficient at exponent e; throws when e is at or past the bound.
    F coeff_at(const Rational& e) const {
        if (e >= precision_bound())
            throw insufficient_precision_error("coefficient requested beyond known precision");
        Rational rel = e * d_ - Rational(lead_);
        if (!is_integral(rel)) return F{};
        if (rel < 0) return F{};
        Integer idx = rel.get_num();
        if (idx >= Integer(static_cast<unsigned long>(coeffs_.size()))) return F{};
        return coeffs_[to_long(idx)];
    }

    friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
        long d = lcm_long(a.d_, b.d_);
        long ka = d / a.d_, kb = d / b.d_;
        std::int64_t bound = std::min((a.lead_ + a.prec_) * ka, (b.lead_ + b.prec_) * kb);
        std::int64_t ea = a.is_zero() ? bound : a.lead_ * ka;
        std::int64_t eb = b.is_zero() ? bound : b.lead_ * kb;
        std::int64_t lead = std::min(ea, eb);
        if (lead >= bound || (a.is_zero() && b.is_zero())) return zero(bound, d);
        const F& proto = a.is_zero() ? b.coeffs_.front() : a.coeffs_.front();
        std::vector<F> c(static_cast<std::size_t>(bound - lead), detail::zero_like(proto));
        auto add_in = [&](const PuiseuxSeries& s, long k) {
            for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
                std::int64_t pos = (s.lead_ + static_cast<std::int64_t>(i)) * k - lead;
                if (pos >= static_cast<std::int64_t>(c.size())) break;
                c[pos] = c[pos] + s.coeffs_[i];
            }
        };
        add_in(a, ka);
        add_in(b, kb);
        return PuiseuxSeries(d, lead, std::move(c), bound - lead);
    }

    PuiseuxSeries operator-() const {
        PuiseuxSeries s(*this);
        for (auto& x : s.coeffs_) x = -x;
        return s;
    }

    friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

    friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
        long d = lcm_long(a.d_, b.d_);
        long ka = d / a.d_, kb = d / b.d_;
        std::int64_t ba = (a.lead_ + a.prec_) * ka, bb = (b.lead_ + b.prec_) * kb;
        // a zero operand contributes only its O(q^bound) tail
        std::int64_t ea = a.is_zero() ? ba : a.lead_ * ka;
        std::int64_t eb = b.is_zero() ? bb : b.lead_ * kb;
        std::int64_t bound = std::min(ea + bb, eb + ba);
        if (a.is_zero() || b.is_zero()) return zero(bound, d);
        std::int64_t lead = ea + eb;
        std::vector<F> c(static_cast<std::size_t>(bound - lead), detail::zero_like(a.coeffs_.front()));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (detail::fe_is_zero(a.coeffs_[i])) continue;
            std::int64_t base = static_cast<std::int64_t>(i) * ka;
            if (base >= static_cast<std::int64_t>(c.size())) break;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                std::int64_t pos = base + static_cast<std::int64_t>(j) * kb;
                if (pos >= static_cast<std::int64_t>(c.size())) break;
                if (detail::fe_is_zero(b.coeffs_[j])) continue;
                c[pos] = c[pos] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return PuiseuxSeries(d, lead, std::move(c), bound - lead);
    }

    // scalar multiple; exact scalars cost no precision
    PuiseuxSeries scaled(const F& s) const {
        if (detail::fe_is_zero(s)) return zero(lead_ + prec_, d_);
        PuiseuxSeries out(*this);
        for (auto& x : out.coeffs_) x = x * s;
        out.normalize();
        return out;
    }

    // multiply by the exact monomial q^e
    PuiseuxSeries mul_monomial(const Rational& e) const {
        long ed = to_long(Integer(e.get_den()));
        long d = lcm_long(d_, ed);
        long k = d / d_;
        std::int64_t shift = to_long(Integer(e.get_num())) * (d / ed);
        if (is_zero()) return zero((lead_ + prec_) * k + shift, d);
        std::vector<F> c(static_cast<std::size_t>(coeffs_.size() - 1) * k + 1,
                         detail::zero_like(coeffs_.front()));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * k] = coeffs_[i];
        return PuiseuxSeries(d, lead_ * k + shift, std::move(c), prec_ * k);
    }

    // multiplicative inverse, preserving relative precision
    PuiseuxSeries inverse() const {
        if (is_zero()) throw division_by_zero_error();
        std::int64_t rel = prec_;
        F c0inv = detail::fe_inverse(coeffs_.front());
        F z = detail::zero_like(coeffs_.front());
        std::vector<F> inv(static_cast<std::size_t>(rel), z);
        inv[0] = c0inv;
        for (std::int64_t k = 1; k < rel; ++k) {
            F acc = z;
            std::int64_t jmax = std::min<std::int64_t>(k, static_cast<std::int64_t>(coeffs_.size()) - 1);
            for (std::int64_t j = 1; j <= jmax; ++j) {
                if (detail::fe_is_zero(coeffs_[j]) || detail::fe_is_zero(inv[k - j])) continue;
                acc = acc + coeffs_[j] * inv[k - j];
            }
            inv[static_cast<std::size_t>(k)] = -(acc * c0inv);
        }
        return PuiseuxSeries(d_, -lead_, std::move(inv), rel);
    }

    PuiseuxSeries pow(long e) const {
        if (e == 0) {
            if (is_zero()) throw std::domain_error("0^0 series");
            return constant(detail::one_like(coeffs_.front()), prec_);
        }
        if (e < 0) return inverse().pow(-e);
        PuiseuxSeries acc = *this, result;
        bool started = false;
        long k = e;
        while (k > 0) {
            if (k & 1) {
                result = started ? result * acc : acc;
                started = true;
            }
            k >>= 1;
            if (k > 0) acc = acc * acc;
        }
        return result;
    }

    friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
        return a.d_ == b.d_ && a.lead_ == b.lead_ && a.prec_ == b.prec_ && a.coeffs_ == b.coeffs_;
    }

    std::string str() const;

  private:
    void normalize() {
        std::size_t k = 0;
        while (k < coeffs_.size() && detail::fe_is_zero(coeffs_[k])) ++k;
        if (k > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(k));
            lead_ += static_cast<std::int64_t>(k);
            prec_ -= static_cast<std::int64_t>(k);
        }
        while (!coeffs_.empty() && detail::fe_is_zero(coeffs_.back())) coeffs_.pop_back();
        if (coeffs_.empty()) {
            std::int64_t bound = lead_ + prec_;
            lead_ = 0;
            // canonical zero on the integer lattice; bound rounds down
            std::int64_t q = bound >= 0 ? bound / d_ : -((-bound + d_ - 1) / d_);
            d_ = 1;
            prec_ = q;
            return;
        }
        if (d_ == 1) return;
        std::int64_t g = d_;
        g = std::gcd(g, lead_);
        for (std::size_t i = 1; i < coeffs_.size() && g > 1; ++i)
            if (!detail::fe_is_zero(coeffs_[i])) g = std::gcd(g, static_cast<std::int64_t>(i));
        std::int64_t bound = lead_ + prec_;
        g = std::gcd(g, bound);
        if (g <= 1) return;
        std::vector<F> c;
        c.reserve(coeffs_.size() / static_cast<std::size_t>(g) + 1);
        for (std::size_t i = 0; i < coeffs_.size(); i += static_cast<std::size_t>(g)) c.push_back(coeffs_[i]);
        coeffs_ = std::move(c);
        d_ = static_cast<long>(d_ / g);
        lead_ /= g;
        prec_ = bound / g - lead_;
    }

    long d_;
    std::int64_t lead_;
    std::vector<F> coeffs_;
    std::int64_t prec_;
};

// Equality of all coefficients at exponents below the smaller knowledge bound.
template <class F>
bool agree_to_precision(const PuiseuxSeries<F>& a, const PuiseuxSeries<F>& b) {
    long d = lcm_long(a.lattice_den(), b.lattice_den());
    long ka = d / a.lattice_den(), kb = d / b.lattice_den();
    std::int64_t bound = std::min((a.lead_num() + a.prec_steps()) * ka, (b.lead_num() + b.prec_steps()) * kb);
    std::int64_t lo = std::min(a.is_zero() ? bound : a.lead_num() * ka, b.is_zero() ? bound : b.lead_num() * kb);
    for (std::int64_t p = lo; p < bound; ++p) {
        Rational e = make_rational(p, d);
        F ca = a.coeff_at(e);
        F cb = b.coeff_at(e);
        bool za = detail::fe_is_zero(ca), zb = detail::fe_is_zero(cb);
        if (za && zb) continue;
        if (za != zb) return false;
        if (!(ca == cb)) return false;
    }
    return true;
}

namespace detail {

inline std::string coeff_str(const Rational& c) { return rational_str(c); }
inline std::string coeff_str(const CyclotomicNumber& c) {
    if (c.is_rational()) return rational_str(c.rational_part());
    return "(" + c.str() + ")";
}

inline std::string exponent_str(std::int64_t num, long den) {
    Rational e = make_rational(num, den);
    if (e == 1) return "q";
    return "q^(" + rational_str(e) + ")";
}

}  // namespace detail

// "q^(a/b)*(c0 + c1*q^(1/d) + ...)": prefactor carries the leading exponent,
// body exponents are relative to it.
template <class F>
std::string PuiseuxSeries<F>::str() const {
    if (is_zero()) return "O(q^(" + rational_str(precision_bound()) + "))";
    std::string out;
    Rational le = leading_exponent();
    if (le != 0) out += "q^(" + rational_str(le) + ")*(";
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (detail::fe_is_zero(coeffs_[i])) continue;
        std::string cs = detail::coeff_str(coeffs_[i]);
        std::string term;
        if (i == 0) {
            term = cs;
        } else {
            term = (cs == "1" ? "" : cs + "*") + detail::exponent_str(static_cast<std::int64_t>(i), d_);
        }
        out += first ? term : " + " + term;
        first = false;
    }
    out += " + ...";
    if (le != 0) out += ")";
    return out;
}

// Expansion of prod_{n == r mod l, n > 0 (or n >= 0)} (1 - zeta*q^n)^e on the
// integer lattice, truncated below exponent prec.  No prefactor is applied.
template <class F>
PuiseuxSeries<F> prog_product(long l, long r, const F& zeta, long e, bool include_n0, std::int64_t prec) {
    if (l < 1) throw std::invalid_argument("modulus must be positive");
    if (prec < 0) throw std::invalid_argument("negative precision");
    if (prec == 0) return PuiseuxSeries<F>::zero(0, 1);
    std::vector<F> a(static_cast<std::size_t>(prec), detail::zero_like(zeta));
    a[0] = detail::one_like(zeta);
    long rr = ((r % l) + l) % l;
    std::int64_t first = rr == 0 ? (include_n0 ? 0 : l) : rr;
    if (e != 0) {
        for (std::int64_t n = first; n < prec; n += l) {
            if (n == 0) {
                // constant factor (1 - zeta)^e
                F c = detail::one_like(zeta) - zeta;
                F base = e > 0 ? c : detail::fe_inverse(c);
                F factor = detail::one_like(zeta);
                for (long i = 0; i < (e > 0 ? e : -e); ++i) factor = factor * base;
                for (auto& x : a) x = x * factor;
                continue;
            }
            for (long pass = 0; pass < (e > 0 ? e : -e); ++pass) {
                if (e > 0) {
                    for (std::int64_t i = prec - 1; i >= n; --i)
                        a[static_cast<std::size_t>(i)] =
                            a[static_cast<std::size_t>(i)] - zeta * a[static_cast<std::size_t>(i - n)];
                } else {
                    for (std::int64_t i = n; i < prec; ++i)
                        a[static_cast<std::size_t>(i)] =
                            a[static_cast<std::size_t>(i)] + zeta * a[static_cast<std::size_t>(i - n)];
                }
            }
        }
    }
    return PuiseuxSeries<F>(1, 0, std::move(a), prec);
}

// Dedekind eta: q^(1/24) * prod_{n>=1} (1 - q^n) on the lattice d = 24.
// prec counts 1/24-lattice steps past the leading exponent.
inline PuiseuxSeries<Rational> eta_expansion(std::int64_t prec) {
    std::int64_t range = (prec + 23) / 24 + 1;
    PuiseuxSeries<Rational> body = prog_product<Rational>(1, 0, Rational(1), 1, false, range);
    std::vector<Rational> c(static_cast<std::size_t>(std::max<std::int64_t>(prec, 1)));
    for (std::size_t i = 0; i < body.coeffs().size(); ++i) {
        std::size_t pos = 24 * i;
        if (pos >= c.size()) break;
        c[pos] = body.coeffs()[i];
    }
    return PuiseuxSeries<Rational>(24, 1, std::move(c), std::max<std::int64_t>(prec, 1));
}

struct ProductExponents {
    std::vector<Rational> a;  // a[n] for n = 1..N, a[0] unused
    bool integral = true;
};

// The unique exponents a(n) with f = prod_{n<=N} (1-q^n)^{a(n)} mod q^(N+1)
// for f in 1 + q*F[[q]], found by inductive division: a(N) is minus the q^N
// coefficient left after clearing all earlier factors.  Works over any
// subring of a characteristic-zero field; integrality is reported, not
// assumed.
inline ProductExponents extract_product_exponents(const PuiseuxSeries<Rational>& f, std::int64_t N) {
    if (f.is_zero() || f.lattice_den() != 1 || f.lead_num() != 0 || f.coeffs().front() != 1)
        throw std::invalid_argument("series must lie in 1 + q*F[[q]]");
    if (f.lead_num() + f.prec_steps() < N + 1)
        throw insufficient_precision_error("need known coefficients through q^N");
    std::vector<Rational> g(static_cast<std::size_t>(N) + 1);
    for (std::size_t i = 0; i < g.size(); ++i)
        g[i] = i < f.coeffs().size() ? f.coeffs()[i] : Rational(0);
    ProductExponents out;
    out.a.assign(static_cast<std::size_t>(N) + 1, Rational(0));
    for (std::int64_t n = 1; n <= N; ++n) {
        Rational an = -g[static_cast<std::size_t>(n)];
        out.a[static_cast<std::size_t>(n)] = an;
        if (!is_integral(an)) out.integral = false;
        if (an == 0) continue;
        // clear the factor: multiply by (1 - q^n)^(-a(n)) via the binomial series
        Rational c = -an;
        std::vector<Rational> w{Rational(1)};
        for (std::int64_t k = 1; n * k <= N; ++k)
            w.push_back(w.back() * (c - Rational(k - 1)) / Rational(k) * Rational(-1));
        std::vector<Rational> h(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i] == 0) continue;
            for (std::size_t k = 0; k < w.size(); ++k) {
                std::size_t pos = i + static_cast<std::size_t>(n) * k;
                if (pos > static_cast<std::size_t>(N)) break;
                h[pos] += g[i] * w[k];
            }
        }
        g = std::move(h);
    }
    return out;
}

// Rebuild prod_{n<=N} (1-q^n)^{a(n)} to the same window; inverse of extraction.
inline PuiseuxSeries<Rational> build_product_from_exponents(const std::vector<Rational>& a, std::int64_t N) {
    std::vector<Rational> g(static_cast<std::size_t>(N) + 1);
    g[0] = 1;
    for (std::int64_t n = 1; n < static_cast<std::int64_t>(a.size()) && n <= N; ++n) {
        const Rational& an = a[static_cast<std::size_t>(n)];
        if (an == 0) continue;
        std::vector<Rational> w{Rational(1)};
        for (std::int64_t k = 1; n * k <= N; ++k)
            w.push_back(w.back() * (an - Rational(k - 1)) / Rational(k) * Rational(-1));
        std::vector<Rational> h(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i] == 0) continue;
            for (std::size_t k = 0; k < w.size(); ++k) {
                std::size_t pos = i + static_cast<std::size_t>(n) * k;
                if (pos > static_cast<std::size_t>(N)) break;
                h[pos] += g[i] * w[k];
            }
        }
        g = std::move(h);
    }
    return PuiseuxSeries<Rational>(1, 0, std::move(g), N + 1);
}

}  // namespace munits
