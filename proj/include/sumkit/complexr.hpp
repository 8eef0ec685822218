#ifndef SUMKIT_COMPLEXR_HPP
#define SUMKIT_COMPLEXR_HPP

#include "sumkit/real.hpp"

namespace sumkit {

/// Minimal complex value over Real; enough for half-plane probes,
/// branch points and eigenvalue formulas.
struct ComplexReal {
    Real re;
    Real im;

    ComplexReal(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit ComplexReal(Real r) : re(std::move(r)), im(0L, re.digits()) {}

    friend ComplexReal operator+(const ComplexReal& a, const ComplexReal& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexReal operator-(const ComplexReal& a, const ComplexReal& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexReal operator*(const ComplexReal& a, const ComplexReal& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexReal operator/(const ComplexReal& a, const ComplexReal& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }

    Real abs() const { return (re * re + im * im).sqrt(); }

    /// Principal square root.
    ComplexReal sqrt() const {
        int digits = re.digits();
        Real zero(0L, digits);
        Real r = abs();
        if (r.is_zero()) return {zero, zero};
        Real two(2L, digits);
        Real u = ((r + re) / two).sqrt();
        Real v = ((r - re) / two).sqrt();
        if (im.sign() < 0) v = -v;
        return {u, v};
    }
};

} // namespace sumkit

#endif
