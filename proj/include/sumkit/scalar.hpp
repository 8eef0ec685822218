#ifndef SUMKIT_SCALAR_HPP
#define SUMKIT_SCALAR_HPP

#include <string>
#include <variant>

#include "sumkit/rational.hpp"
#include "sumkit/real.hpp"

namespace sumkit {

inline constexpr int kDefaultDigits = Real::kDefaultDigits;

/// Two-level numeric value: exact rational or precision real.
/// Field operations on two exact values stay exact; anything mixing the
/// levels promotes to the real level and the result remembers it.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(long n) : v_(Rational(n)) {}
    Scalar(Rational q) : v_(std::move(q)) {}
    Scalar(Real r) : v_(std::move(r)) {}
    Scalar(Rational q, bool promoted) : v_(std::move(q)), promoted_(promoted) {}
    Scalar(Real r, bool promoted) : v_(std::move(r)), promoted_(promoted) {}

    static Scalar ratio(long num, long den) { return Scalar(Rational(num, den)); }

    bool is_exact() const { return std::holds_alternative<Rational>(v_); }
    bool was_promoted() const { return promoted_; }

    const Rational& rational() const; // throws DomainError when not exact
    Real real(int digits = kDefaultDigits) const;

    bool is_zero() const;
    int sign() const;
    Scalar abs() const;
    double to_double() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b) { return apply(a, b, Op::Add); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return apply(a, b, Op::Sub); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) { return apply(a, b, Op::Mul); }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return apply(a, b, Op::Div); }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar pow_int(long e) const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return cmp(a, b) >= 0; }

    /// "p/q" for exact values, %.{digits}Rg otherwise.
    std::string str(int digits = kDefaultDigits) const;

private:
    enum class Op { Add, Sub, Mul, Div };
    static Scalar apply(const Scalar& a, const Scalar& b, Op op);
    static int cmp(const Scalar& a, const Scalar& b);

    std::variant<Rational, Real> v_;
    bool promoted_ = false;
};

} // namespace sumkit

#endif
