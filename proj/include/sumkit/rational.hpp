#ifndef SUMKIT_RATIONAL_HPP
#define SUMKIT_RATIONAL_HPP

#include <gmp.h>

#include <cstdint>
#include <string>

namespace sumkit {

/// Exact arbitrary-size rational, always kept in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long n) {
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }
    Rational(long num, long den);
    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    // Accepts "p", "p/q" and leading '-'. Throws ParseError otherwise.
    static Rational from_string(const std::string& s);

    static Rational factorial(unsigned long n);
    static Rational double_factorial(unsigned long n); // n!! with (-1)!! = 1
    static Rational binomial(unsigned long n, unsigned long k);
    static Rational pow2(long e); // 2^e, e may be negative

    Rational operator-() const;
    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) < 0;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) <= 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    Rational abs() const;
    Rational pow_int(long e) const; // e may be negative (throws on 0^-e)
    Rational inverse() const;

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    double to_double() const { return mpq_get_d(q_); }
    std::string str() const; // "p/q", or "p" when the denominator is 1
    std::string numerator_str() const;
    std::string denominator_str() const;

    // Number of decimal digits in the larger of |p|, q.
    std::size_t digit_size() const;

    const mpq_t& raw() const { return q_; }
    mpq_t& raw() { return q_; }

private:
    mpq_t q_;
};

} // namespace sumkit

#endif
