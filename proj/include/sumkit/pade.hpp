#ifndef SUMKIT_PADE_HPP
#define SUMKIT_PADE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumkit/complexr.hpp"
#include "sumkit/sequence.hpp"

namespace sumkit {
namespace pade {

/// Moments a_0, a_1, ... normalized so a_0 = 1; `scale` keeps the original
/// a_0. When declared a Stieltjes candidate, positivity is checked on
/// construction.
class MomentSequence {
public:
    explicit MomentSequence(std::vector<Scalar> a, bool stieltjes_candidate = false);

    const std::vector<Scalar>& a() const { return a_; }
    const Scalar& scale() const { return scale_; }
    long size() const { return static_cast<long>(a_.size()); }

    /// Moments read off a series sum c_n z^n as a_n = (-1)^n c_n.
    static MomentSequence from_series(const CoefficientSequence& seq, long count,
                                      bool stieltjes_candidate = false);

private:
    std::vector<Scalar> a_;
    Scalar scale_;
};

/// Continued-fraction layer coefficients b_1, b_2, ...; `terminated` marks
/// a fraction that ended on a degenerate (finite-measure) moment set.
struct ContFracCoeffs {
    std::vector<Scalar> b;
    bool terminated = false;
};

/// Monic orthogonal polynomials P_0..P_K built from the recurrence
/// P_{n+1} = x P_n - b_n P_{n-1}; polys[n][k] is the coefficient of x^k.
struct OrthogonalPolySet {
    std::vector<std::vector<Scalar>> polys;
};

/// Moments -> continued-fraction coefficients via the moment functional
/// L[x^{2k}] = a_k and b_n = L[P_n^2]/L[P_{n-1}^2]. Returns b_1..b_{len-1},
/// or a shorter, flagged result when the measure terminates.
ContFracCoeffs moments_to_contfrac(const MomentSequence& a);

/// The same computation, also exposing the polynomial set it built.
std::pair<ContFracCoeffs, OrthogonalPolySet> moments_to_contfrac_full(const MomentSequence& a);

/// Continued-fraction coefficients -> moments a_0..a_K by the weighted
/// lattice-path transfer recurrence. Inverse of moments_to_contfrac.
MomentSequence contfrac_to_moments(const ContFracCoeffs& b, long K);

/// Rational function num/den with den(0) = 1 whose Maclaurin expansion
/// matches the source series through order n + m.
struct PadeRational {
    std::vector<Scalar> num; // degree n
    std::vector<Scalar> den; // degree m, den[0] = 1
    long order_n = 0;
    long order_m = 0;

    Scalar eval(const Scalar& z) const;
    ComplexReal eval(const ComplexReal& z) const;
};

/// [n/m] approximant of sum seq.signed_term(k) z^k: exact elimination for
/// the denominator, convolution for the numerator, and an order-(n+m)
/// matching check before returning. Throws SingularSystem when the Hankel
/// block is singular.
PadeRational pade_approximant(const CoefficientSequence& seq, long n, long m);

/// Staircase values [0/0], [0/1], [1/1], [1/2], ... at z, computed by the
/// continued-fraction convergent three-term recurrence on the b's.
std::vector<std::pair<std::string, Scalar>> staircase_evaluate(const CoefficientSequence& seq,
                                                               const Scalar& z, long depth);

/// Same, but directly from known b's and an overall factor a_0.
std::vector<std::pair<std::string, Scalar>> staircase_from_contfrac(const ContFracCoeffs& cf,
                                                                    const Scalar& a0,
                                                                    const Scalar& z, long depth);

struct HankelReport {
    // det of the leading (k+1)x(k+1) block of (a_{i+j}) and (a_{i+j+1}).
    std::vector<Scalar> dets_plain;
    std::vector<Scalar> dets_shifted;
    bool all_positive = false;     // strict positivity of every computed det
    bool boundary_degenerate = false; // some det vanished (rank-deficient)
    long first_failure_order = -1; // order of the first negative det, -1 if none
};

/// Necessary positivity conditions for the Stieltjes character of a
/// moment prefix: leading principal Hankel determinants of the plain and
/// once-shifted sequences.
HankelReport stieltjes_hankel_check(const MomentSequence& a);

struct CarlemanReport {
    double c_estimate = 0.0; // fitted c in a_n <~ (2n)! c^n
    double slope_drift = 0.0;
    bool satisfied = false;
    std::string summary;
};

/// Least-squares fit of log(a_n/(2n)!) against n on the available prefix;
/// bounded slope means the growth condition holds on the evidence.
CarlemanReport carleman_check(const MomentSequence& a);

struct HerglotzReport {
    long points_checked = 0;
    long violations = 0;
    std::vector<std::pair<double, double>> violation_points; // (re, im)
    bool herglotz_compatible = false;
};

/// Samples -p(z) at deterministic points off the real axis and reports any
/// sign violation of Im(-p(z)) * Im(z) > 0.
HerglotzReport herglotz_probe(const PadeRational& p, long samples, int digits = 20);

/// Power-series coefficients c_0..c_K of the continued exponential
/// a_0 exp(a_1 z exp(a_2 z exp(...))).
std::vector<Scalar> continued_exponential(const std::vector<Scalar>& a, long K);

/// Triangular inverse: recover a_0..a_K from c_0..c_K. Needs c_0 != 0 and,
/// whenever some higher c is nonzero, a nonvanishing a-chain below it.
std::vector<Scalar> continued_exponential_match(const std::vector<Scalar>& c, long K);

} // namespace pade
} // namespace sumkit

#endif
