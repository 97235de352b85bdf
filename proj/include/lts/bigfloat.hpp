// Thin RAII wrapper over MPFR floats with per-value precision.
//
// Verification runs at 128 bits by default and 256 bits in certification
// mode, so precision is a property of the value, not a global setting.
#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lts {

class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 128) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_long(long x, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigFloat from_double(double x, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigFloat from_rational(const mpq_class& q, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static BigFloat from_integer(const mpz_class& z, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    /// Parses a decimal string; throws on malformed input.
    static BigFloat from_string(const std::string& s, mpfr_prec_t prec) {
        BigFloat r(prec);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("BigFloat: cannot parse '" + s + "'");
        return r;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& o) {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator-=(const BigFloat& o) {
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator*=(const BigFloat& o) {
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    BigFloat neg() const {
        BigFloat r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat abs() const {
        BigFloat r(precision());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    /// Square root; domain errors surface as NaN, as in MPFR.
    BigFloat sqrt() const {
        BigFloat r(precision());
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }

    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    int cmp(double d) const { return mpfr_cmp_d(v_, d); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.cmp(b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.cmp(b) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return a.cmp(b) == 0; }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Correctly rounded decimal with `digits` significant digits.
    std::string to_string(int digits = 40) const {
        char buf[128];
        mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, v_);
        return std::string(buf);
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

}  // namespace lts
