// Probability values in one of three representations:
//   rational  num/den           (exact)
//   quad surd (a + b*sqrt(d))/q (exact; d squarefree, gcd(a,b,q)=1, q>0)
//   decimal   MPFR float at a chosen precision
//
// Arithmetic stays closed inside a representation where it can. Surds over
// the same radicand combine exactly; anything else promotes to decimal.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "lts/bigfloat.hpp"

namespace lts {

constexpr mpfr_prec_t kDefaultPrecision = 128;
constexpr mpfr_prec_t kCertifyPrecision = 256;

namespace detail {

/// Splits z > 0 as s^2 * d with d squarefree. Trial division up to 10^6,
/// then a perfect-square check on the remainder.
inline void extract_square_part(const mpz_class& z, mpz_class& s, mpz_class& d) {
    s = 1;
    d = z;
    for (mpz_class p = 2; p <= 1000000; p += (p == 2) ? 1 : 2) {
        mpz_class p2 = p * p;
        if (p2 > d) break;
        while (mpz_divisible_p(d.get_mpz_t(), p2.get_mpz_t())) {
            d /= p2;
            s *= p;
        }
    }
    if (mpz_perfect_square_p(d.get_mpz_t())) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), d.get_mpz_t());
        s *= r;
        d = 1;
    }
}

}  // namespace detail

/// (a + b*sqrt(d)) / q with b != 0, q > 0, d positive and squarefree.
struct QuadSurd {
    mpz_class a, b, q;
    mpz_class d;

    /// Exact sign of a + b*sqrt(d).
    static int sign_of(const mpz_class& a, const mpz_class& b, const mpz_class& d) {
        int sa = sgn(a), sb = sgn(b);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa > 0 && sb > 0) return 1;
        if (sa < 0 && sb < 0) return -1;
        // opposite signs: compare a^2 with b^2 d
        mpz_class lhs = a * a, rhs = b * b * d;
        int c = cmp(lhs, rhs);
        if (c == 0) return 0;
        return (c > 0) ? sa : sb;
    }

    int sign() const { return sign_of(a, b, d); }

    double to_double() const {
        return (a.get_d() + b.get_d() * std::sqrt(d.get_d())) / q.get_d();
    }
};

class Probability {
public:
    Probability() : v_(mpq_class(0)) {}

    Probability(const mpq_class& q) : v_(q) {
        mpq_class& r = std::get<mpq_class>(v_);
        r.canonicalize();
        if (r < 0 || r > 1) throw std::domain_error("probability outside [0,1]");
    }
    Probability(long num, long den) : Probability(mpq_class(num, den)) {}

    explicit Probability(BigFloat f) : v_(std::move(f)) {
        const BigFloat& b = std::get<BigFloat>(v_);
        if (b.is_nan() || b.cmp(0.0) < 0 || b.cmp(1.0) > 0)
            throw std::domain_error("probability outside [0,1]");
    }

    /// Builds (a + b*sqrt(d))/q, normalizing to the canonical form; collapses
    /// to a rational when the radical part vanishes.
    static Probability make_surd(mpz_class a, mpz_class b, mpz_class d, mpz_class q) {
        if (sgn(q) == 0) throw std::domain_error("surd with zero denominator");
        if (sgn(d) <= 0) throw std::domain_error("surd radicand must be positive");
        if (sgn(q) < 0) { a = -a; b = -b; q = -q; }
        mpz_class sq, dfree;
        detail::extract_square_part(d, sq, dfree);
        b *= sq;
        if (dfree == 1) { a += b; b = 0; }
        if (sgn(b) == 0) return Probability(mpq_class(a, q));
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_mpz_t());
        a /= g; b /= g; q /= g;
        QuadSurd s{a, b, q, dfree};
        if (s.sign() < 0 || QuadSurd::sign_of(q - a, -b, dfree) < 0)
            throw std::domain_error("probability outside [0,1]");
        Probability p;
        p.v_ = std::move(s);
        return p;
    }

    bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
    bool is_surd() const { return std::holds_alternative<QuadSurd>(v_); }
    bool is_decimal() const { return std::holds_alternative<BigFloat>(v_); }

    const mpq_class& rational() const { return std::get<mpq_class>(v_); }
    const QuadSurd& surd() const { return std::get<QuadSurd>(v_); }
    const BigFloat& decimal() const { return std::get<BigFloat>(v_); }

    bool is_one() const { return is_rational() && rational() == 1; }
    bool is_zero() const { return is_rational() && rational() == 0; }

    BigFloat to_bigfloat(mpfr_prec_t prec) const {
        if (is_rational()) return BigFloat::from_rational(rational(), prec);
        if (is_surd()) {
            const QuadSurd& s = surd();
            BigFloat rad = BigFloat::from_integer(s.d, prec).sqrt();
            return (BigFloat::from_integer(s.a, prec) +
                    BigFloat::from_integer(s.b, prec) * rad) /
                   BigFloat::from_integer(s.q, prec);
        }
        return decimal();
    }
    double to_double() const {
        if (is_rational()) return rational().get_d();
        if (is_surd()) return surd().to_double();
        return decimal().to_double();
    }

    /// 1 - p, exact for rational and surd values.
    Probability complement() const {
        if (is_rational()) return Probability(mpq_class(1) - rational());
        if (is_surd()) {
            const QuadSurd& s = surd();
            return make_surd(s.q - s.a, -s.b, s.d, s.q);
        }
        return Probability(BigFloat::from_long(1, decimal().precision()) - decimal());
    }

    /// Product; exact when both operands live in the same field.
    Probability times(const Probability& o, mpfr_prec_t prec = kDefaultPrecision) const {
        if (is_rational() && o.is_rational())
            return Probability(rational() * o.rational());
        if (is_rational() && o.is_surd()) return o.times(*this, prec);
        if (is_surd() && o.is_rational()) {
            const QuadSurd& s = surd();
            const mpq_class& r = o.rational();
            return make_surd(s.a * r.get_num(), s.b * r.get_num(), s.d,
                             s.q * r.get_den());
        }
        if (is_surd() && o.is_surd() && surd().d == o.surd().d) {
            const QuadSurd& x = surd;
            (void)x;
            const QuadSurd& s = surd();
            const QuadSurd& t = o.surd();
            return make_surd(s.a * t.a + s.b * t.b * s.d, s.a * t.b + s.b * t.a,
                             s.d, s.q * t.q);
        }
        return Probability(to_bigfloat(prec) * o.to_bigfloat(prec));
    }

    /// Exact equality; mixed exact representations never coincide
    /// (a nontrivial surd is irrational), decimals compare numerically.
    bool operator==(const Probability& o) const {
        if (is_rational() && o.is_rational()) return rational() == o.rational();
        if (is_surd() && o.is_surd()) {
            const QuadSurd& s = surd();
            const QuadSurd& t = o.surd();
            return s.a == t.a && s.b == t.b && s.d == t.d && s.q == t.q;
        }
        if (is_decimal() && o.is_decimal()) return decimal() == o.decimal();
        if (is_decimal() || o.is_decimal()) {
            mpfr_prec_t p = std::max(is_decimal() ? decimal().precision() : 2,
                                     o.is_decimal() ? o.decimal().precision() : 2);
            return to_bigfloat(p) == o.to_bigfloat(p);
        }
        return false;
    }
    bool operator!=(const Probability& o) const { return !(*this == o); }

private:
    std::variant<mpq_class, QuadSurd, BigFloat> v_;
};

inline Probability half() { return Probability(1, 2); }

}  // namespace lts
