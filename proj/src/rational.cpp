#include "sumkit/rational.hpp"

#include <cctype>

#include "sumkit/errors.hpp"

namespace sumkit {

Rational::Rational(long num, long den) {
    mpq_init(q_);
    if (den == 0) throw DomainError("rational with zero denominator");
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
}

Rational Rational::from_string(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw ParseError("empty rational literal");
    for (std::size_t i = 0; i < t.size(); ++i) {
        char c = t[i];
        bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
                  ((c == '-' || c == '+') && (i == 0 || t[i - 1] == '/'));
        if (!ok) throw ParseError("bad rational literal: " + s);
    }
    Rational r;
    if (mpq_set_str(r.q_, t.c_str(), 10) != 0)
        throw ParseError("bad rational literal: " + s);
    if (mpz_sgn(mpq_denref(r.q_)) == 0)
        throw ParseError("zero denominator: " + s);
    mpq_canonicalize(r.q_);
    return r;
}

Rational Rational::factorial(unsigned long n) {
    Rational r;
    mpz_fac_ui(mpq_numref(r.q_), n);
    return r;
}

Rational Rational::double_factorial(unsigned long n) {
    Rational r;
    mpz_2fac_ui(mpq_numref(r.q_), n);
    return r;
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
    Rational r;
    mpz_bin_uiui(mpq_numref(r.q_), n, k);
    return r;
}

Rational Rational::pow2(long e) {
    Rational r(1);
    if (e >= 0)
        mpz_mul_2exp(mpq_numref(r.q_), mpq_numref(r.q_), static_cast<unsigned long>(e));
    else
        mpz_mul_2exp(mpq_denref(r.q_), mpq_denref(r.q_), static_cast<unsigned long>(-e));
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
}

Rational Rational::abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    Rational r;
    mpq_inv(r.q_, q_);
    return r;
}

Rational Rational::pow_int(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? *this : inverse();
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), n);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), n);
    return r;
}

std::string Rational::str() const {
    char* c = mpq_get_str(nullptr, 10, q_);
    std::string s(c);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(c, s.size() + 1);
    return s;
}

std::string Rational::numerator_str() const {
    char* c = mpz_get_str(nullptr, 10, mpq_numref(q_));
    std::string s(c);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(c, s.size() + 1);
    return s;
}

std::string Rational::denominator_str() const {
    char* c = mpz_get_str(nullptr, 10, mpq_denref(q_));
    std::string s(c);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(c, s.size() + 1);
    return s;
}

std::size_t Rational::digit_size() const {
    std::size_t n = mpz_sizeinbase(mpq_numref(q_), 10);
    std::size_t d = mpz_sizeinbase(mpq_denref(q_), 10);
    return n > d ? n : d;
}

} // namespace sumkit
