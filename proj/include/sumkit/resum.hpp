#ifndef SUMKIT_RESUM_HPP
#define SUMKIT_RESUM_HPP

#include <optional>
#include <string>
#include <vector>

#include "sumkit/sequence.hpp"

namespace sumkit {
namespace resum {

enum class Method { Euler, Borel, Generic, Zeta, Direct };

/// Value assigned to a series plus how it was obtained. Non-exact values
/// always carry diagnostics.
struct SummationResult {
    Scalar value;
    Method method;
    std::vector<std::string> diagnostics;

    SummationResult(Scalar v, Method m, std::vector<std::string> diag);
};

/// p(t) e^{-w t} with polynomial p; closed under t d/dt, with the weight
/// tracked so extra e^{-t} factors stay bookkept.
class ExpPolynomial {
public:
    ExpPolynomial(std::vector<Scalar> coeffs, long weight)
        : coeffs_(std::move(coeffs)), weight_(weight) {}

    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    long weight() const { return weight_; }

    /// t d/dt (p e^{-wt}) = (t p' - w t p) e^{-wt}.
    ExpPolynomial apply_theta() const;
    /// Multiply by e^{-t} (weight goes up by one).
    ExpPolynomial times_exp() const;
    /// Exact integral over [0, inf) using int t^k e^{-wt} dt = k!/w^{k+1}.
    Scalar integrate() const;

private:
    std::vector<Scalar> coeffs_;
    long weight_;
};

/// Abel-limit summation: evaluates the power series on the geometric
/// ladder x_j = 1 - 2^-j and extrapolates j -> infinity; results that
/// stabilize onto a simple rational are returned exactly.
SummationResult euler_sum(const CoefficientSequence& seq, int digits);

/// s_p as the p-th derivative of the logistic function at 0, via the
/// exact recurrence sigma' = sigma (1 - sigma). Equals the Abel value of
/// 1 - 2^p + 3^p - ...
Scalar euler_alternating_power(long p);

/// Closed-form Borel value of 1 - 2^p + 3^p - ... built from
/// (t d/dt)^{p-1} (t e^{-t}) and exact term-by-term integration.
Scalar borel_sum_closed(long p);

/// Numeric Borel summation: Borel-transform the series at `point`,
/// continue the transform with a diagonal Pade sweep and integrate
/// against e^{-t}.
SummationResult borel_sum_numeric(const CoefficientSequence& seq, const Scalar& point,
                                  int digits);

/// Value forced by finite additivity + linearity for a repeating pattern;
/// the pattern must sum to zero over one period.
Scalar generic_sum_periodic(const std::vector<Scalar>& pattern);
/// Same, with an explicit finite prefix in front of the repeating part.
Scalar generic_sum_periodic(const std::vector<Scalar>& prefix,
                            const std::vector<Scalar>& pattern);

/// first/(1 - ratio), the unique axiom-consistent geometric value.
Scalar geometric_sum(const Scalar& first, const Scalar& ratio);

/// zeta(-k) = -B_{k+1}/(k+1), with the B_1 = +1/2 convention that the
/// functional equation uses.
Scalar zeta_negative(long k);

/// First N terms of the greedy rearrangement of 1 - 1/2 + 1/3 - ... that
/// oscillates around `target`: +n stands for +1/n (odd n), -n for -1/n
/// (even n).
std::vector<long> riemann_rearrange(const Scalar& target, long N);

/// Partial sum of a rearrangement prefix (test/CLI helper).
double rearrangement_partial_sum(const std::vector<long>& indices);

} // namespace resum
} // namespace sumkit

#endif
