#include "sumkit/real.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "sumkit/errors.hpp"

namespace sumkit {

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
        digits_ = o.digits_;
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) {
        mpfr_swap(x_, o.x_);
        digits_ = o.digits_;
    }
    return *this;
}

Real Real::pi(int digits) {
    Real r(digits);
    mpfr_const_pi(r.x_, MPFR_RNDN);
    return r;
}

Real Real::from_string(const std::string& s, int digits) {
    Real r(digits);
    if (mpfr_set_str(r.x_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw ParseError("bad real literal: " + s);
    return r;
}

Real Real::operator-() const {
    Real r(digits_);
    mpfr_set_prec(r.x_, mpfr_get_prec(x_));
    mpfr_neg(r.x_, x_, MPFR_RNDN);
    return r;
}

Real Real::unop(const Real& a, Unary f) {
    Real r(a.digits_);
    mpfr_set_prec(r.x_, mpfr_get_prec(a.x_));
    f(r.x_, a.x_, MPFR_RNDN);
    return r;
}

Real Real::binop(const Real& a, const Real& b, Binary f) {
    Real r(std::max(a.digits_, b.digits_));
    mpfr_set_prec(r.x_, std::max(mpfr_get_prec(a.x_), mpfr_get_prec(b.x_)));
    f(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

Real Real::pow_int(long e) const {
    Real r(digits_);
    mpfr_set_prec(r.x_, mpfr_get_prec(x_));
    mpfr_pow_si(r.x_, x_, e, MPFR_RNDN);
    return r;
}

Real Real::exp10(int k, int digits) {
    Real r(1L, digits);
    mpfr_t ten;
    mpfr_init2(ten, 32);
    mpfr_set_ui(ten, 10, MPFR_RNDN);
    mpfr_pow_si(r.x_, ten, k, MPFR_RNDN);
    mpfr_clear(ten);
    return r;
}

std::string Real::str(int digits) const {
    int d = digits > 0 ? digits : digits_;
    std::vector<char> buf(static_cast<std::size_t>(d) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", d, x_);
    return std::string(buf.data());
}

std::string Real::str_fixed(int decimals) const {
    std::vector<char> buf(static_cast<std::size_t>(decimals) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", decimals, x_);
    return std::string(buf.data());
}

} // namespace sumkit
