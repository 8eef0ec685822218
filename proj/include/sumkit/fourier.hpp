#ifndef SUMKIT_FOURIER_HPP
#define SUMKIT_FOURIER_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumkit/quadrature.hpp"
#include "sumkit/scalar.hpp"

namespace sumkit {
namespace fourier {

/// Function handle with enough structure for exact shortcuts: constants,
/// polynomials and pure sines integrate in closed form; sampled data uses
/// composite rules on its own grid; anything else is a plain callable.
class FuncSpec {
public:
    enum class Kind { Zero, Constant, Poly, Sine, Samples, Callable };

    static FuncSpec zero();
    static FuncSpec constant(Scalar c);
    /// p(x) = sum coeffs[k] x^k.
    static FuncSpec poly(std::vector<Scalar> coeffs);
    /// amp * sin(k x).
    static FuncSpec sine(Scalar amp, long k);
    static FuncSpec samples(std::vector<double> xs, std::vector<double> ys);
    static FuncSpec callable(std::function<Real(const Real&)> fn, std::string name = "callable");

    /// Named specs used by the CLI: "zero", "one", "const:<p/q>", "sin",
    /// "parabola" (x(pi-x)), "file:<two-column csv>".
    static FuncSpec parse(const std::string& text);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const Scalar& const_value() const { return const_; }
    const std::vector<Scalar>& poly_coeffs() const { return poly_; }
    const Scalar& sine_amp() const { return const_; }
    long sine_mode() const { return sine_k_; }
    const std::vector<double>& sample_xs() const { return xs_; }
    const std::vector<double>& sample_ys() const { return ys_; }

    bool is_zero() const { return kind_ == Kind::Zero; }

    Real eval(const Real& x) const;

private:
    Kind kind_ = Kind::Zero;
    std::string name_ = "zero";
    Scalar const_ = Scalar(0);
    std::vector<Scalar> poly_;
    long sine_k_ = 1;
    std::vector<double> xs_, ys_;
    std::function<Real(const Real&)> fn_;
};

/// Sine-series coefficients a_1..a_N on [0, pi], with an optional
/// 2c/(pi n) tail model (c parity-dependent).
struct SineSeries {
    std::vector<Scalar> coeffs; // a_1..a_N
    std::optional<std::pair<Scalar, Scalar>> tail_model; // (c_even, c_odd)

    long size() const { return static_cast<long>(coeffs.size()); }
    const Scalar& coeff(long n) const { return coeffs[static_cast<std::size_t>(n - 1)]; }

    /// Partial sum sum a_n sin(n x).
    Real eval(const Real& x) const;

    /// Tagged copy with the a_n ~ 2c/(pi n) tail model attached; the
    /// residuals must decay like n^-3 on the stored prefix (ratio fit),
    /// otherwise DomainError.
    SineSeries with_tail_model(const Scalar& c_even, const Scalar& c_odd,
                               int digits = kDefaultDigits) const;
};

/// a_1..a_N of f, in closed form where the handle's structure allows it,
/// by adaptive quadrature otherwise.
SineSeries sine_coefficients(const FuncSpec& f, long N, int digits);

/// Endpoint values (f(0), f(pi)) recovered from the 1/n coefficient
/// asymptotics: n a_n is extrapolated separately over even and odd n and
/// the 2x2 parity system is solved. Throws TailMismatch when the two
/// parity extrapolations cannot be reconciled.
std::pair<Scalar, Scalar> endpoint_recovery(const SineSeries& s, int digits = kDefaultDigits);

/// f0 (1 - x/pi) + fpi (x/pi), the closed-form image of the
/// (pi - x)/2 sine identity under the parity system.
struct BoundaryTerm {
    Scalar f0;
    Scalar fpi;
    Real eval(const Real& x) const;
};

/// Splits s into a closed-form boundary term plus a residual series whose
/// coefficients decay faster than 1/n.
std::pair<BoundaryTerm, SineSeries> gibbs_accelerate(const SineSeries& s,
                                                     int digits = kDefaultDigits);

/// (2/pi) integral_0^alpha sin(s)/s ds.
Scalar gibbs_overshoot(const Scalar& alpha, int digits = 20);

/// Heat problem on [0, pi]: u_t = u_xx, u(x,0) = f, u(0,t) = g,
/// u(pi,t) = h.
struct HeatProblem {
    FuncSpec f;
    FuncSpec g;
    FuncSpec h;
    long modes = 1;
    std::vector<Scalar> time_grid;
};

struct HeatSolution {
    std::vector<Scalar> times;
    long modes = 0;
    bool accelerated = false;
    int digits = 20;
    /// mode_coeffs[k][n-1] = a_n(t_k).
    std::vector<std::vector<Scalar>> mode_coeffs;
    /// Residuals a_n(t) - (2/(pi n)) phi_n(t), only when accelerated.
    std::vector<std::vector<Scalar>> residual_coeffs;
    /// (g(t_k), h(t_k)) for the closed boundary-layer part.
    std::vector<std::pair<Scalar, Scalar>> boundary_values;

    Real evaluate(const Real& x, std::size_t time_index) const;
    /// Abel-bound estimate of the mode-truncation error at x.
    Real truncation_estimate(const Real& x, std::size_t time_index) const;
};

/// Per-mode Duhamel solution
///   a_n(t) = e^{-n^2 t} a_n(0) + (2n/pi) int_0^t e^{-n^2 (t-s)} phi_n(s) ds
/// evaluated in the overflow-free convolution form, with optional
/// mode-wise tail subtraction and closed boundary layer. Boundary data
/// must be continuous; the subtracted 2 phi(t)/(pi n) tail additionally
/// assumes differentiable phi, which the residual decay check enforces
/// after the fact.
HeatSolution heat_solve(const HeatProblem& p, bool accelerate, int digits = 20);

} // namespace fourier
} // namespace sumkit

#endif
