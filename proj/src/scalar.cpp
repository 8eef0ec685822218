#include "sumkit/scalar.hpp"

#include <algorithm>

#include "sumkit/errors.hpp"

namespace sumkit {

const Rational& Scalar::rational() const {
    if (!is_exact()) throw DomainError("scalar is not exact");
    return std::get<Rational>(v_);
}

Real Scalar::real(int digits) const {
    if (is_exact()) return Real(std::get<Rational>(v_), digits);
    return std::get<Real>(v_);
}

bool Scalar::is_zero() const {
    return is_exact() ? std::get<Rational>(v_).is_zero() : std::get<Real>(v_).is_zero();
}

int Scalar::sign() const {
    return is_exact() ? std::get<Rational>(v_).sign() : std::get<Real>(v_).sign();
}

Scalar Scalar::abs() const {
    if (is_exact()) return Scalar(std::get<Rational>(v_).abs(), promoted_);
    return Scalar(std::get<Real>(v_).abs(), promoted_);
}

double Scalar::to_double() const {
    return is_exact() ? std::get<Rational>(v_).to_double() : std::get<Real>(v_).to_double();
}

Scalar Scalar::operator-() const {
    if (is_exact()) return Scalar(-std::get<Rational>(v_), promoted_);
    return Scalar(-std::get<Real>(v_), promoted_);
}

Scalar Scalar::apply(const Scalar& a, const Scalar& b, Op op) {
    bool flag = a.promoted_ || b.promoted_;
    if (a.is_exact() && b.is_exact()) {
        const Rational& x = std::get<Rational>(a.v_);
        const Rational& y = std::get<Rational>(b.v_);
        switch (op) {
            case Op::Add: return Scalar(x + y, flag);
            case Op::Sub: return Scalar(x - y, flag);
            case Op::Mul: return Scalar(x * y, flag);
            case Op::Div: return Scalar(x / y, flag);
        }
    }
    // Mixed levels: promote the exact side at the real side's budget.
    int digits = kDefaultDigits;
    if (!a.is_exact()) digits = std::max(digits, std::get<Real>(a.v_).digits());
    if (!b.is_exact()) digits = std::max(digits, std::get<Real>(b.v_).digits());
    if (!a.is_exact() && !b.is_exact())
        digits = std::max(std::get<Real>(a.v_).digits(), std::get<Real>(b.v_).digits());
    Real x = a.real(digits);
    Real y = b.real(digits);
    flag = flag || a.is_exact() != b.is_exact();
    switch (op) {
        case Op::Add: return Scalar(x + y, flag);
        case Op::Sub: return Scalar(x - y, flag);
        case Op::Mul: return Scalar(x * y, flag);
        case Op::Div: return Scalar(x / y, flag);
    }
    throw DomainError("unreachable");
}

Scalar Scalar::pow_int(long e) const {
    if (is_exact()) return Scalar(std::get<Rational>(v_).pow_int(e), promoted_);
    return Scalar(std::get<Real>(v_).pow_int(e), promoted_);
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) {
        const Rational& x = std::get<Rational>(a.v_);
        const Rational& y = std::get<Rational>(b.v_);
        if (x < y) return -1;
        if (y < x) return 1;
        return 0;
    }
    int digits = kDefaultDigits;
    if (!a.is_exact()) digits = std::max(digits, std::get<Real>(a.v_).digits());
    if (!b.is_exact()) digits = std::max(digits, std::get<Real>(b.v_).digits());
    Real x = a.real(digits);
    Real y = b.real(digits);
    if (x < y) return -1;
    if (y < x) return 1;
    return 0;
}

std::string Scalar::str(int digits) const {
    if (is_exact()) return std::get<Rational>(v_).str();
    return std::get<Real>(v_).str(digits);
}

} // namespace sumkit
