#ifndef SUMKIT_REAL_HPP
#define SUMKIT_REAL_HPP

#include <mpfr.h>

#include <string>

#include "sumkit/rational.hpp"

namespace sumkit {

/// Arbitrary-precision real with an explicit decimal digit budget.
/// Binary operations carry the larger budget of the two operands.
class Real {
public:
    static constexpr int kDefaultDigits = 50;

    explicit Real(int digits = kDefaultDigits) : digits_(digits) {
        mpfr_init2(x_, bits(digits));
        mpfr_set_zero(x_, 1);
    }
    Real(long v, int digits) : digits_(digits) {
        mpfr_init2(x_, bits(digits));
        mpfr_set_si(x_, v, MPFR_RNDN);
    }
    Real(double v, int digits) : digits_(digits) {
        mpfr_init2(x_, bits(digits));
        mpfr_set_d(x_, v, MPFR_RNDN);
    }
    Real(const Rational& q, int digits) : digits_(digits) {
        mpfr_init2(x_, bits(digits));
        mpfr_set_q(x_, q.raw(), MPFR_RNDN);
    }
    Real(const Real& o) : digits_(o.digits_) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept : digits_(o.digits_) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_swap(x_, o.x_);
    }
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real() { mpfr_clear(x_); }

    static Real pi(int digits);
    static Real from_string(const std::string& s, int digits);

    int digits() const { return digits_; }

    Real operator-() const;
    friend Real operator+(const Real& a, const Real& b) { return binop(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return binop(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return binop(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return binop(a, b, mpfr_div); }
    Real& operator+=(const Real& o) { return *this = *this + o; }
    Real& operator-=(const Real& o) { return *this = *this - o; }
    Real& operator*=(const Real& o) { return *this = *this * o; }
    Real& operator/=(const Real& o) { return *this = *this / o; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return b < a; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return b <= a; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) == 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

    Real abs() const { return unop(*this, mpfr_abs); }
    Real sqrt() const { return unop(*this, mpfr_sqrt); }
    Real exp() const { return unop(*this, mpfr_exp); }
    Real log() const { return unop(*this, mpfr_log); }
    Real sin() const { return unop(*this, mpfr_sin); }
    Real cos() const { return unop(*this, mpfr_cos); }
    Real sinh() const { return unop(*this, mpfr_sinh); }
    Real cosh() const { return unop(*this, mpfr_cosh); }
    Real atan() const { return unop(*this, mpfr_atan); }
    Real pow_int(long e) const;

    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    bool is_finite() const { return mpfr_number_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(x_, MPFR_RNDN); }

    // %.{digits}Rg rendering; deterministic for fixed digits.
    std::string str(int digits = -1) const;
    // Fixed-point rendering with the given number of decimals.
    std::string str_fixed(int decimals) const;

    // 10^(-k) at this value's precision.
    static Real exp10(int k, int digits);

    const mpfr_t& raw() const { return x_; }
    mpfr_t& raw() { return x_; }

    static mpfr_prec_t bits(int digits) {
        double b = digits * 3.3219280948873623 + 16;
        return static_cast<mpfr_prec_t>(b);
    }

private:
    using Unary = int (*)(mpfr_t, const mpfr_t, mpfr_rnd_t);
    using Binary = int (*)(mpfr_t, const mpfr_t, const mpfr_t, mpfr_rnd_t);
    static Real unop(const Real& a, Unary f);
    static Real binop(const Real& a, const Real& b, Binary f);

    mpfr_t x_;
    int digits_;
};

} // namespace sumkit

#endif
