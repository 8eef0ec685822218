#include "sumkit/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "sumkit/accel.hpp"
#include "sumkit/errors.hpp"

namespace sumkit {
namespace fourier {

FuncSpec FuncSpec::zero() { return FuncSpec(); }

FuncSpec FuncSpec::constant(Scalar c) {
    FuncSpec s;
    if (c.is_zero()) return s;
    s.kind_ = Kind::Constant;
    s.const_ = std::move(c);
    s.name_ = "const:" + s.const_.str();
    return s;
}

FuncSpec FuncSpec::poly(std::vector<Scalar> coeffs) {
    FuncSpec s;
    s.kind_ = Kind::Poly;
    s.poly_ = std::move(coeffs);
    s.name_ = "poly";
    return s;
}

FuncSpec FuncSpec::sine(Scalar amp, long k) {
    if (k < 1) throw DomainError("sine mode must be >= 1");
    FuncSpec s;
    s.kind_ = Kind::Sine;
    s.const_ = std::move(amp);
    s.sine_k_ = k;
    s.name_ = "sin:" + std::to_string(k);
    return s;
}

FuncSpec FuncSpec::samples(std::vector<double> xs, std::vector<double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw DomainError("sample function needs matching xs/ys with >= 2 points");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1])) throw DomainError("sample grid must be increasing");
    FuncSpec s;
    s.kind_ = Kind::Samples;
    s.xs_ = std::move(xs);
    s.ys_ = std::move(ys);
    s.name_ = "samples";
    return s;
}

FuncSpec FuncSpec::callable(std::function<Real(const Real&)> fn, std::string name) {
    FuncSpec s;
    s.kind_ = Kind::Callable;
    s.fn_ = std::move(fn);
    s.name_ = std::move(name);
    return s;
}

FuncSpec FuncSpec::parse(const std::string& text) {
    if (text == "zero" || text == "0") return zero();
    if (text == "one" || text == "1") return constant(Scalar(1));
    if (text == "sin") return sine(Scalar(1), 1);
    if (text == "parabola") {
        // x (pi - x)
        Real pi = Real::pi(kDefaultDigits);
        return poly({Scalar(0), Scalar(pi), Scalar(-1L)});
    }
    if (text.rfind("const:", 0) == 0)
        return constant(Scalar(Rational::from_string(text.substr(6))));
    if (text.rfind("file:", 0) == 0) {
        std::ifstream in(text.substr(5));
        if (!in) throw ParseError("cannot open sample file " + text.substr(5));
        std::vector<double> xs, ys;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::replace(line.begin(), line.end(), ',', ' ');
            std::istringstream ls(line);
            double x, y;
            if (ls >> x >> y) {
                xs.push_back(x);
                ys.push_back(y);
            }
        }
        return samples(std::move(xs), std::move(ys));
    }
    throw ParseError("unknown function spec: " + text);
}

Real FuncSpec::eval(const Real& x) const {
    int digits = x.digits();
    switch (kind_) {
        case Kind::Zero:
            return Real(0L, digits);
        case Kind::Constant:
            return const_.real(digits);
        case Kind::Poly: {
            Real acc(0L, digits);
            for (auto it = poly_.rbegin(); it != poly_.rend(); ++it)
                acc = acc * x + it->real(digits);
            return acc;
        }
        case Kind::Sine:
            return const_.real(digits) * (Real(sine_k_, digits) * x).sin();
        case Kind::Samples: {
            double xv = x.to_double();
            if (xv <= xs_.front()) return Real(ys_.front(), digits);
            if (xv >= xs_.back()) return Real(ys_.back(), digits);
            auto it = std::upper_bound(xs_.begin(), xs_.end(), xv);
            std::size_t i = static_cast<std::size_t>(it - xs_.begin());
            double t = (xv - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
            return Real(ys_[i - 1] + t * (ys_[i] - ys_[i - 1]), digits);
        }
        case Kind::Callable:
            return fn_(x);
    }
    throw DomainError("unreachable");
}

Real SineSeries::eval(const Real& x) const {
    int digits = x.digits();
    Real acc(0L, digits);
    for (long n = 1; n <= size(); ++n)
        acc += coeff(n).real(digits) * (Real(n, digits) * x).sin();
    return acc;
}

SineSeries SineSeries::with_tail_model(const Scalar& c_even, const Scalar& c_odd,
                                       int digits) const {
    if (size() < 8) throw InsufficientTerms("tail model needs >= 8 coefficients");
    Real pi = Real::pi(digits);
    auto residual = [&](long n) {
        const Scalar& c = (n % 2) ? c_odd : c_even;
        Real model = Real(2L, digits) * c.real(digits) / (pi * Real(n, digits));
        return (coeff(n).real(digits) - model).abs();
    };
    // Ratio fit of the decay exponent between the half point and the end;
    // residuals already at the noise floor pass outright.
    long hi = size(), lo = size() / 2;
    Real r_hi = residual(hi), r_lo = residual(lo);
    Real floor = Real::exp10(-(digits - 10), digits);
    if (r_hi > floor || r_lo > floor) {
        if (r_hi.is_zero()) r_hi = floor;
        double p_est = (r_lo / r_hi).log().to_double() /
                       std::log(static_cast<double>(hi) / static_cast<double>(lo));
        if (p_est < 2.5)
            throw DomainError("tail-model residuals decay like n^-" + std::to_string(p_est) +
                              ", slower than n^-3");
    }
    SineSeries tagged = *this;
    tagged.tail_model = std::make_pair(c_even, c_odd);
    return tagged;
}

namespace {

// int_0^pi x^m sin(nx) dx and int_0^pi x^m cos(nx) dx via the
// integration-by-parts recurrences.
void sin_cos_moments(long m_max, long n, const Real& pi, std::vector<Scalar>& I,
                     std::vector<Scalar>& J) {
    Scalar sgn((n % 2) ? -1L : 1L); // (-1)^n
    Scalar inv_n = Scalar(1) / Scalar(n);
    I.assign(static_cast<std::size_t>(m_max) + 1, Scalar(0));
    J.assign(static_cast<std::size_t>(m_max) + 1, Scalar(0));
    I[0] = (Scalar(1) - sgn) * inv_n;
    J[0] = Scalar(0);
    Scalar pim(1); // pi^m
    for (long m = 1; m <= m_max; ++m) {
        pim = pim * Scalar(pi);
        I[static_cast<std::size_t>(m)] =
            -(pim * sgn) * inv_n + Scalar(m) * inv_n * J[static_cast<std::size_t>(m - 1)];
        J[static_cast<std::size_t>(m)] = -Scalar(m) * inv_n * I[static_cast<std::size_t>(m - 1)];
    }
}

} // namespace

SineSeries sine_coefficients(const FuncSpec& f, long N, int digits) {
    if (N < 1) throw DomainError("sine_coefficients needs N >= 1");
    SineSeries out;
    out.coeffs.reserve(static_cast<std::size_t>(N));
    const Real pi = Real::pi(digits + 8);
    const Real two_over_pi = Real(2L, digits + 8) / pi;

    switch (f.kind()) {
        case FuncSpec::Kind::Zero: {
            out.coeffs.assign(static_cast<std::size_t>(N), Scalar(0));
            return out;
        }
        case FuncSpec::Kind::Constant: {
            // a_n = 2c(1 - (-1)^n)/(pi n): 4c/(pi n) odd, exactly 0 even
            for (long n = 1; n <= N; ++n) {
                if (n % 2 == 0)
                    out.coeffs.emplace_back(Scalar(0));
                else
                    out.coeffs.emplace_back(
                        Scalar(Real(4L, digits + 8) / (pi * Real(n, digits + 8))) *
                        f.const_value());
            }
            return out;
        }
        case FuncSpec::Kind::Sine: {
            for (long n = 1; n <= N; ++n)
                out.coeffs.emplace_back(n == f.sine_mode() ? f.sine_amp() : Scalar(0));
            return out;
        }
        case FuncSpec::Kind::Poly: {
            const auto& p = f.poly_coeffs();
            long deg = static_cast<long>(p.size()) - 1;
            std::vector<Scalar> I, J;
            for (long n = 1; n <= N; ++n) {
                sin_cos_moments(deg, n, pi, I, J);
                Scalar acc(0);
                for (long m = 0; m <= deg; ++m)
                    acc += p[static_cast<std::size_t>(m)] * I[static_cast<std::size_t>(m)];
                out.coeffs.emplace_back(Scalar(two_over_pi) * acc);
            }
            return out;
        }
        case FuncSpec::Kind::Samples: {
            // Composite Simpson over node pairs of the sample grid itself;
            // no evaluation between samples.
            const auto& xs = f.sample_xs();
            const auto& ys = f.sample_ys();
            for (long n = 1; n <= N; ++n) {
                auto g = [&](std::size_t i) { return ys[i] * std::sin(n * xs[i]); };
                double acc = 0;
                std::size_t i = 0;
                for (; i + 2 < xs.size(); i += 2) {
                    double h1 = xs[i + 1] - xs[i], h2 = xs[i + 2] - xs[i + 1];
                    if (std::fabs(h1 - h2) < 1e-12 * (h1 + h2)) {
                        acc += (xs[i + 2] - xs[i]) / 6.0 * (g(i) + 4.0 * g(i + 1) + g(i + 2));
                    } else {
                        acc += 0.5 * h1 * (g(i) + g(i + 1)) + 0.5 * h2 * (g(i + 1) + g(i + 2));
                    }
                }
                if (i + 1 < xs.size())
                    acc += 0.5 * (xs[i + 1] - xs[i]) * (g(i) + g(i + 1));
                out.coeffs.emplace_back(Scalar(Real(acc * 2.0 / M_PI, digits)));
            }
            return out;
        }
        case FuncSpec::Kind::Callable: {
            for (long n = 1; n <= N; ++n) {
                auto integrand = [&](const Real& x) {
                    return f.eval(x) * (Real(n, digits + 8) * x).sin();
                };
                Real v = quadrature_finite(integrand, Real(0L, digits + 8), pi, digits,
                                           static_cast<int>(std::max<long>(4, n)));
                out.coeffs.emplace_back(Scalar(two_over_pi * v));
            }
            return out;
        }
    }
    throw DomainError("unreachable");
}

namespace {

// Extrapolate v_k -> limit assuming a 1/k power expansion; returns the
// order-q and order-(q-1) Richardson estimates for a consistency check.
std::pair<Scalar, Scalar> tail_limit(const std::vector<Scalar>& v) {
    if (v.size() < 3) throw InsufficientTerms("tail extrapolation needs >= 3 points");
    PartialSums seq{std::vector<Scalar>(v)};
    int order = static_cast<int>(std::min<std::size_t>(5, v.size() - 1));
    long n_start = static_cast<long>(v.size()) - order;
    Scalar hi = accel::richardson(seq, order, n_start);
    Scalar lo = order > 1 ? accel::richardson(seq, order - 1, n_start + 1) : v.back();
    return {hi, lo};
}

} // namespace

std::pair<Scalar, Scalar> endpoint_recovery(const SineSeries& s, int digits) {
    if (s.size() < 8) throw InsufficientTerms("endpoint recovery needs >= 8 coefficients");
    std::vector<Scalar> odd, even;
    for (long n = 1; n <= s.size(); ++n) {
        Scalar y = Scalar(n) * s.coeff(n);
        (n % 2 ? odd : even).push_back(std::move(y));
    }
    auto [odd_hi, odd_lo] = tail_limit(odd);
    auto [even_hi, even_lo] = tail_limit(even);

    Real tol(1e-3, digits);
    auto consistent = [&](const Scalar& a, const Scalar& b) {
        Real scale = a.real(digits).abs() + b.real(digits).abs() + Real(1L, digits);
        return (a - b).real(digits).abs() <= tol * scale;
    };
    if (!consistent(odd_hi, odd_lo) || !consistent(even_hi, even_lo))
        throw TailMismatch("even/odd tail extrapolations disagree beyond tolerance");

    Real half_pi = Real::pi(digits) / Real(2L, digits);
    auto to_c = [&](const Scalar& hi, const Scalar& lo) {
        if (hi.is_exact() && hi.rational().is_zero()) return Scalar(0);
        // A limit buried under the extrapolation noise is a zero limit.
        Real spread = (hi - lo).real(digits).abs();
        Real floor = spread * Real(10L, digits) + Real::exp10(-(digits - 8), digits);
        if (hi.real(digits).abs() < floor) return Scalar(0);
        return Scalar(half_pi) * hi;
    };
    Scalar c_odd = to_c(odd_hi, odd_lo);
    Scalar c_even = to_c(even_hi, even_lo);
    Scalar two(2);
    return {(c_odd + c_even) / two, (c_odd - c_even) / two};
}

Real BoundaryTerm::eval(const Real& x) const {
    int digits = x.digits();
    Real pi = Real::pi(digits);
    return f0.real(digits) * (Real(1L, digits) - x / pi) + fpi.real(digits) * (x / pi);
}

std::pair<BoundaryTerm, SineSeries> gibbs_accelerate(const SineSeries& s, int digits) {
    auto [f0, fpi] = endpoint_recovery(s, digits);
    BoundaryTerm bt{f0, fpi};
    SineSeries residual;
    residual.coeffs.reserve(s.coeffs.size());
    bool zero_boundary = f0.is_exact() && f0.rational().is_zero() && fpi.is_exact() &&
                         fpi.rational().is_zero();
    Real pi = Real::pi(digits + 8);
    for (long n = 1; n <= s.size(); ++n) {
        if (zero_boundary) {
            residual.coeffs.push_back(s.coeff(n));
            continue;
        }
        // b_n = (2/(pi n)) (f0 + (-1)^{n+1} fpi)
        Scalar c = (n % 2) ? f0 + fpi : f0 - fpi;
        Scalar bn = Scalar(Real(2L, digits + 8) / (pi * Real(n, digits + 8))) * c;
        residual.coeffs.push_back(s.coeff(n) - bn);
    }
    return {bt, residual};
}

Scalar gibbs_overshoot(const Scalar& alpha, int digits) {
    if (alpha.sign() < 0) throw DomainError("gibbs_overshoot needs alpha >= 0");
    if (alpha.is_zero()) return Scalar(0);
    int work = digits + 8;
    Real a = alpha.real(work);
    auto sinc = [&](const Real& s) { return s.is_zero() ? Real(1L, work) : s.sin() / s; };
    int panels = static_cast<int>(std::max(4.0, std::ceil(a.to_double() / M_PI) * 2));
    Real v = quadrature_finite(sinc, Real(0L, work), a, digits, panels);
    return Scalar(Real(2L, work) / Real::pi(work) * v);
}

namespace {

// phi_n(s) = (-1)^{n+1} h(s) + g(s)
Real phi_eval(const FuncSpec& g, const FuncSpec& h, long n, const Real& s) {
    Real gv = g.eval(s);
    Real hv = h.eval(s);
    return (n % 2) ? gv + hv : gv - hv;
}

} // namespace

HeatSolution heat_solve(const HeatProblem& p, bool accelerate, int digits) {
    if (p.modes < 1) throw DomainError("heat_solve needs modes >= 1");
    if (p.time_grid.empty()) throw DomainError("heat_solve needs a time grid");
    for (std::size_t k = 0; k < p.time_grid.size(); ++k) {
        if (p.time_grid[k].sign() < 0) throw DomainError("time grid must be nonnegative");
        if (k > 0 && !(p.time_grid[k] > p.time_grid[k - 1]))
            throw DomainError("time grid must be increasing");
    }
    const int work = digits + 8;
    const Real pi = Real::pi(work);

    SineSeries init = sine_coefficients(p.f, p.modes, digits);
    const bool g_const =
        p.g.kind() == FuncSpec::Kind::Zero || p.g.kind() == FuncSpec::Kind::Constant;
    const bool h_const =
        p.h.kind() == FuncSpec::Kind::Zero || p.h.kind() == FuncSpec::Kind::Constant;

    HeatSolution sol;
    sol.times = p.time_grid;
    sol.modes = p.modes;
    sol.accelerated = accelerate;
    sol.digits = digits;

    for (std::size_t k = 0; k < p.time_grid.size(); ++k) {
        Real t = p.time_grid[k].real(work);
        std::vector<Scalar> coeffs;
        std::vector<Scalar> residuals;
        coeffs.reserve(static_cast<std::size_t>(p.modes));
        for (long n = 1; n <= p.modes; ++n) {
            Real n2t = Real(n, work) * Real(n, work) * t;
            Real decay = (-n2t).exp();
            Real an = init.coeff(n).real(work) * decay;
            if (!(p.g.is_zero() && p.h.is_zero())) {
                Real duhamel(0L, work);
                if (g_const && h_const) {
                    // phi constant: J = phi (1 - e^{-n^2 t})/n^2
                    Real phi = phi_eval(p.g, p.h, n, Real(0L, work));
                    duhamel = phi * (Real(1L, work) - decay) / Real(n * n, work);
                } else if (!t.is_zero()) {
                    // J = (1/n^2) int_0^{n^2 t} e^{-u} phi(t - u/n^2) du
                    Real n2(n * n, work);
                    auto integrand = [&](const Real& u) {
                        Real s = t - u / n2;
                        if (s.sign() < 0) s = Real(0L, work);
                        return (-u).exp() * phi_eval(p.g, p.h, n, s);
                    };
                    double span = n2t.to_double();
                    if (span > (digits + 6) * 2.302585)
                        duhamel = quadrature_semi_infinite(integrand, digits).real(work) / n2;
                    else
                        duhamel =
                            quadrature_finite(integrand, Real(0L, work), n2t, digits, 8) / n2;
                }
                an += Real(2L * n, work) / pi * duhamel;
            }
            coeffs.emplace_back(an);
            if (accelerate) {
                Real phi_now = phi_eval(p.g, p.h, n, t);
                Real tail = Real(2L, work) / (pi * Real(n, work)) * phi_now;
                residuals.emplace_back(an - tail);
            }
        }
        if (accelerate) {
            // Residuals must fall off faster than the 1/n tail they replace.
            Real head(0L, work), tailmax(0L, work), amax(0L, work);
            long third = std::max<long>(p.modes / 3, 1);
            for (long n = 1; n <= p.modes; ++n) {
                Real weighted = residuals[static_cast<std::size_t>(n - 1)].real(work).abs() *
                                Real(n, work).pow_int(3);
                if (n <= third && weighted > head) head = weighted;
                if (n > p.modes - third && weighted > tailmax) tailmax = weighted;
                Real am = coeffs[static_cast<std::size_t>(n - 1)].real(work).abs();
                if (am > amax) amax = am;
            }
            Real floor = amax * Real::exp10(-std::max(digits - 10, 4), work) +
                         Real::exp10(-(digits + 20), work);
            if (tailmax > Real(4L, work) * (head + floor))
                throw ModeBudgetExceeded(
                    "accelerated residuals fail their n^-3 decay check at t = " +
                    p.time_grid[k].str(6));
            sol.residual_coeffs.push_back(std::move(residuals));
            sol.boundary_values.emplace_back(Scalar(p.g.eval(t)), Scalar(p.h.eval(t)));
        }
        sol.mode_coeffs.push_back(std::move(coeffs));
    }
    return sol;
}

Real HeatSolution::evaluate(const Real& x, std::size_t time_index) const {
    int d = x.digits();
    Real acc(0L, d);
    if (accelerated) {
        const auto& [gv, hv] = boundary_values[time_index];
        Real pi = Real::pi(d);
        acc = gv.real(d) * (Real(1L, d) - x / pi) + hv.real(d) * (x / pi);
        const auto& res = residual_coeffs[time_index];
        for (long n = 1; n <= modes; ++n)
            acc += res[static_cast<std::size_t>(n - 1)].real(d) * (Real(n, d) * x).sin();
        return acc;
    }
    const auto& cs = mode_coeffs[time_index];
    for (long n = 1; n <= modes; ++n)
        acc += cs[static_cast<std::size_t>(n - 1)].real(d) * (Real(n, d) * x).sin();
    return acc;
}

Real HeatSolution::truncation_estimate(const Real& x, std::size_t time_index) const {
    int d = x.digits();
    // Abel bound: |sum_{n>N} b_n sin nx| <= b_N / sin(x/2) for decreasing b.
    Real half_sin = (x / Real(2L, d)).sin().abs();
    if (half_sin < Real(1e-6, d)) half_sin = Real(1e-6, d);
    const auto& cs = accelerated ? residual_coeffs[time_index] : mode_coeffs[time_index];
    Real last = cs.back().real(d).abs();
    if (cs.size() >= 2) {
        Real prev = cs[cs.size() - 2].real(d).abs();
        if (prev > last) last = prev;
    }
    return last / half_sin;
}

} // namespace fourier
} // namespace sumkit
