#ifndef SUMKIT_QUADRATURE_HPP
#define SUMKIT_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "sumkit/scalar.hpp"

namespace sumkit {

using RealFunction = std::function<Real(const Real&)>;

/// Integral of f over [0, inf) to |error| < 10^-digits. The integrand must
/// be continuous on [0, inf) and decay at least exponentially. Uses the
/// double-exponential substitution t = exp((pi/2) sinh u) with interval
/// halving; throws ConvergenceFailure when refinements keep disagreeing.
Scalar quadrature_semi_infinite(const RealFunction& integrand, int digits);

/// Integral of f over [a, b] by composite Gauss-Legendre panels, refined
/// until two successive panel counts agree to 10^-digits.
Real quadrature_finite(const RealFunction& integrand, const Real& a, const Real& b, int digits,
                       int initial_panels = 4);

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
/// computed at the requested precision (cached per (n, digits)).
struct GaussRule {
    std::vector<Real> nodes;
    std::vector<Real> weights;
};
const GaussRule& gauss_legendre(int n, int digits);

} // namespace sumkit

#endif
