#ifndef SUMKIT_PHYSICS_HPP
#define SUMKIT_PHYSICS_HPP

#include <string>
#include <utility>
#include <vector>

#include "sumkit/complexr.hpp"
#include "sumkit/sequence.hpp"

namespace sumkit {
namespace physics {

/// Ground-state energy expansion of p^2/2 + x^2/2 + eps x^4. The
/// subtracted form is F(eps) = (E0(eps) - E0(0))/eps.
struct PerturbationSeries {
    std::vector<Scalar> coeffs;
    bool subtracted = false;

    CoefficientSequence as_sequence() const;
};

/// Exact E0 coefficients through order K from the Rayleigh-Schrodinger
/// recursion in the number basis (kept rational by working with the
/// unnormalized (a^dag)^m |0> basis, where x^4 acts with integer weights).
PerturbationSeries anharmonic_coefficients(long K);

/// F-series (3/4, -21/8, 333/16, ...) through order K of F.
PerturbationSeries anharmonic_f_series(long K);

/// Magnitude of the large-order growth formula
/// sqrt(6) pi^{-3/2} 3^n Gamma(n + 1/2), with the half-integer Gamma
/// evaluated as an exact rational multiple of sqrt(pi).
Scalar anharmonic_asymptotic(long n, int digits = kDefaultDigits);

/// Staircase Pade table for the ground-state energy at eps = 1: entries
/// (label, 1/2 + [n/m]_F(1)). depth 4 reproduces the eight-entry table.
std::vector<std::pair<std::string, Scalar>> anharmonic_pade_table(long depth);

/// N(n) = (4n-1)!!/(n! (4!)^n), the multiplicity-weighted diagram count.
Scalar diagram_count(long n);

/// Casimir energy and force per unit area between plates at distance L:
/// (-pi^2/(720 L^3), -pi^2/(240 L^4)), built from zeta(-3) = 1/120.
std::pair<Scalar, Scalar> casimir_force(const Scalar& L, int digits = kDefaultDigits);

/// Real symmetric two-level Hamiltonian ((a, eps c), (eps c, b)).
struct TwoLevelSystem {
    Scalar a;
    Scalar b;
    Scalar c;
};

struct TwoLevelSpectrum {
    ComplexReal e_plus;
    ComplexReal e_minus;
    ComplexReal branch_point_plus;  // +i(a-b)/(2c)
    ComplexReal branch_point_minus; // -i(a-b)/(2c)
};

/// E± = (a + b ± sqrt((a-b)^2 + 4 eps^2 c^2))/2 for complex eps; for real
/// eps the eigenvalues are real with E+ >= E-.
TwoLevelSpectrum two_level_spectrum(const TwoLevelSystem& sys, const ComplexReal& eps);

enum class QuinticVariant { Regular, Singular };

struct QuinticReport {
    QuinticVariant variant;
    std::vector<Scalar> coeffs;       // series in eps (regular/singular direct)
    Scalar radius;                    // convergence radius of that series
    Scalar partial_sum;               // sum of the series at eps
    Scalar reference_root;            // bisection root of the eps-equation
    // singular variant extras
    std::vector<Scalar> delta_series; // surviving root s(delta), delta = eps^{1/4}
    std::vector<std::pair<std::string, Scalar>> staircase; // Pade rescue at eps
    double runaway_scaling = 0.0;     // mean |z_i| eps^{1/4} over the 4 runaway roots
};

/// Perturbative study of x^5 + eps x - 1 = 0 (regular insertion) or
/// eps x^5 + x - 1 = 0 (singular insertion) at the given eps.
QuinticReport quintic_root_study(QuinticVariant variant, long K, const Scalar& eps,
                                 int digits = kDefaultDigits);

/// Real root of x^5 + c1 x + c0 = 0 on [lo, hi] by bisection.
Real quintic_bisection_root(const Real& c1, const Real& c0, const Real& lo, const Real& hi,
                            int digits);

} // namespace physics
} // namespace sumkit

#endif
