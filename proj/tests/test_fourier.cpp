#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sumkit/errors.hpp"
#include "sumkit/fourier.hpp"
#include "test_util.hpp"

using namespace sumkit;
using namespace sumkit::fourier;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("sine coefficients of f = 1: 4/(n pi) odd, exactly 0 even") {
    auto s = sine_coefficients(FuncSpec::constant(Scalar(1)), 12, 30);
    Real pi = Real::pi(40);
    for (long n = 1; n <= 12; ++n) {
        if (n % 2 == 0) {
            CHECK(s.coeff(n).is_exact());
            CHECK(s.coeff(n).is_zero());
        } else {
            Real expect = Real(4L, 40) / (pi * Real(n, 40));
            CHECK((s.coeff(n).real(40) - expect).abs() < Real::exp10(-25, 40));
        }
    }
}

TEST_CASE("sine coefficients of f = sin x: orthogonality") {
    auto s = sine_coefficients(FuncSpec::sine(Scalar(1), 1), 8, 30);
    CHECK(s.coeff(1).rational() == Rational(1));
    for (long n = 2; n <= 8; ++n) CHECK(s.coeff(n).is_zero());
}

TEST_CASE("sine coefficients of x(pi - x): 8/(pi n^3) odd") {
    Real pi = Real::pi(40);
    auto f = FuncSpec::poly({Scalar(0), Scalar(pi), Scalar(-1L)});
    auto s = sine_coefficients(f, 10, 30);
    for (long n = 1; n <= 10; ++n) {
        Real expect = (n % 2) ? Real(8L, 40) / (pi * Real(n * n * n, 40)) : Real(0L, 40);
        CHECK((s.coeff(n).real(40) - expect).abs() < Real::exp10(-25, 40));
    }
    // cross-check the closed form against the quadrature path
    auto fc = FuncSpec::callable(
        [](const Real& x) { return x * (Real::pi(x.digits()) - x); }, "parabola");
    auto sq = sine_coefficients(fc, 6, 20);
    for (long n = 1; n <= 6; ++n)
        CHECK((s.coeff(n).real(20) - sq.coeff(n).real(20)).abs() < Real::exp10(-18, 20));
}

TEST_CASE("sampled functions integrate on their own grid") {
    std::vector<double> xs, ys;
    for (int i = 0; i <= 400; ++i) {
        double x = kPi * i / 400;
        xs.push_back(x);
        ys.push_back(std::sin(x));
    }
    auto s = sine_coefficients(FuncSpec::samples(xs, ys), 3, 16);
    CHECK(testutil::close(s.coeff(1), 1.0, 1e-6));
    CHECK(testutil::close(s.coeff(2), 0.0, 1e-6));
}

TEST_CASE("endpoint recovery from the coefficient asymptotics") {
    // a_n = e^{1/n} - 1 -> (pi/2, 0)
    SineSeries s1;
    for (long n = 1; n <= 400; ++n)
        s1.coeffs.push_back(Scalar((Real(1L, 40) / Real(n, 40)).exp() - Real(1L, 40)));
    auto [f0, fpi] = endpoint_recovery(s1, 30);
    CHECK(testutil::close(f0, kPi / 2, 1e-8));
    CHECK(testutil::close(fpi, 0.0, 1e-8));

    // a_n = 4/(n pi) odd, 0 even -> (1, 1)
    auto sf1 = sine_coefficients(FuncSpec::constant(Scalar(1)), 400, 30);
    auto [g0, gpi] = endpoint_recovery(sf1, 30);
    CHECK(testutil::close(g0, 1.0, 1e-12));
    CHECK(testutil::close(gpi, 1.0, 1e-12));

    // rapidly decaying coefficients -> (0, 0)
    SineSeries s3;
    for (long n = 1; n <= 60; ++n) s3.coeffs.push_back(Scalar(Rational(1, n * n * n)));
    auto [h0, hpi] = endpoint_recovery(s3, 30);
    CHECK(testutil::close(h0, 0.0, 1e-6));
    CHECK(testutil::close(hpi, 0.0, 1e-6));
}

TEST_CASE("endpoint recovery inverts synthetic parity data") {
    testutil::Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        Rational f0 = rng.rational();
        Rational fpi = rng.rational();
        SineSeries s;
        int digits = 50;
        Real pi = Real::pi(digits + 10);
        for (long n = 1; n <= 80; ++n) {
            Rational c = (n % 2) ? f0 + fpi : f0 - fpi; // (-1)^{n+1} fpi + f0
            Real a = Real(2L, digits + 10) * Real(c, digits + 10) /
                     (pi * Real(n, digits + 10));
            s.coeffs.push_back(Scalar(a));
        }
        auto [r0, rpi] = endpoint_recovery(s, digits);
        CHECK((r0.real(digits) - Real(f0, digits)).abs() < Real::exp10(-(digits - 8), digits));
        CHECK((rpi.real(digits) - Real(fpi, digits)).abs() <
              Real::exp10(-(digits - 8), digits));
    }
}

TEST_CASE("endpoint recovery needs coefficients and coherent tails") {
    SineSeries tiny;
    for (long n = 1; n <= 4; ++n) tiny.coeffs.push_back(Scalar(Rational(1, n)));
    CHECK_THROWS_AS(endpoint_recovery(tiny), InsufficientTerms);

    // incoherent data: noisy alternation that fits no 1/n tail
    SineSeries noisy;
    testutil::Rng rng(5);
    for (long n = 1; n <= 40; ++n)
        noisy.coeffs.push_back(Scalar(Rational(rng.integer(-9, 9), 1)));
    CHECK_THROWS_AS(endpoint_recovery(noisy), TailMismatch);
}

TEST_CASE("gibbs acceleration splits boundary term and fast residual") {
    // a_n = e^{1/n} - 1: boundary term (pi/2)(1 - x/pi), residual e^{1/n}-1-1/n
    SineSeries s;
    int digits = 30;
    for (long n = 1; n <= 400; ++n)
        s.coeffs.push_back(Scalar((Real(1L, 45) / Real(n, 45)).exp() - Real(1L, 45)));
    auto [bt, residual] = gibbs_accelerate(s, digits);
    CHECK(testutil::close(bt.f0, kPi / 2, 1e-8));
    CHECK(testutil::close(bt.fpi, 0.0, 1e-8));
    for (long n : {1L, 2L, 5L, 50L}) {
        double expect = std::exp(1.0 / n) - 1.0 - 1.0 / n;
        CHECK(testutil::close(residual.coeff(n), expect, 1e-7));
    }
    // boundary-term evaluation matches (pi/2)(1 - x/pi) = (pi - x)/2
    Real x(1.0, 30);
    CHECK(testutil::close(bt.eval(x), (kPi - 1.0) / 2.0, 1e-7));

    // fast input passes through unchanged
    SineSeries fast;
    for (long n = 1; n <= 60; ++n) fast.coeffs.push_back(Scalar(Rational(1, n * n * n)));
    auto [bt2, res2] = gibbs_accelerate(fast, digits);
    CHECK(testutil::close(bt2.f0, 0.0, 1e-6));
    for (long n = 1; n <= 60; ++n) CHECK(res2.coeff(n) == fast.coeff(n));

    // f = 1 series: boundary term is 1 exactly and residuals cancel
    auto sf1 = sine_coefficients(FuncSpec::constant(Scalar(1)), 200, 30);
    auto [bt3, res3] = gibbs_accelerate(sf1, digits);
    CHECK(testutil::close(bt3.f0, 1.0, 1e-12));
    CHECK(testutil::close(bt3.fpi, 1.0, 1e-12));
    for (long n = 1; n <= 200; n += 37)
        CHECK(res3.coeff(n).real(30).abs() < Real::exp10(-12, 30));
}

TEST_CASE("residual decay: |r_n| n^3 stays bounded after acceleration") {
    auto s = sine_coefficients(FuncSpec::constant(Scalar(1)), 300, 30);
    auto [bt, res] = gibbs_accelerate(s, 30);
    (void)bt;
    double bound = 0;
    for (long n = 1; n <= 300; ++n)
        bound = std::max(bound,
                         std::fabs(res.coeff(n).to_double()) * std::pow(double(n), 3.0));
    CHECK(bound < 1e-9); // exact cancellation case
}

TEST_CASE("gibbs overshoot values") {
    CHECK(gibbs_overshoot(Scalar(0), 12).is_zero());
    double si_pi = oracles::adaptive_simpson(
        [](double s) { return s == 0 ? 1.0 : std::sin(s) / s; }, 0.0, kPi, 1e-12);
    auto v = gibbs_overshoot(Scalar(Real(kPi, 30)), 14);
    CHECK(testutil::close(v, 2.0 / kPi * si_pi, 1e-10));
    CHECK(testutil::close(v, 1.17898, 1e-5));
    auto big = gibbs_overshoot(Scalar(200), 12);
    CHECK(std::fabs(big.to_double() - 1.0) < 1e-2);
}

TEST_CASE("heat: single sine mode decays exactly") {
    HeatProblem p;
    p.f = FuncSpec::sine(Scalar(1), 1);
    p.g = FuncSpec::zero();
    p.h = FuncSpec::zero();
    p.modes = 6;
    p.time_grid = {Scalar(Rational(1, 2)), Scalar(1)};
    auto sol = heat_solve(p, false, 20);
    for (std::size_t k = 0; k < 2; ++k) {
        double t = p.time_grid[k].to_double();
        for (double x : {0.3, 1.0, 2.2}) {
            double expect = std::exp(-t) * std::sin(x);
            CHECK(testutil::close(sol.evaluate(Real(x, 20), k), expect, 1e-15));
        }
    }
}

TEST_CASE("heat: f = 1 with cold walls keeps the 4/(n pi) e^{-n^2 t} coefficients") {
    HeatProblem p;
    p.f = FuncSpec::constant(Scalar(1));
    p.g = FuncSpec::zero();
    p.h = FuncSpec::zero();
    p.modes = 9;
    p.time_grid = {Scalar(Rational(1, 4))};
    auto sol = heat_solve(p, false, 20);
    for (long n = 1; n <= 9; ++n) {
        double expect = (n % 2) ? 4.0 / (n * kPi) * std::exp(-0.25 * n * n) : 0.0;
        CHECK(testutil::close(sol.mode_coeffs[0][static_cast<std::size_t>(n - 1)], expect,
                              1e-15));
    }
}

TEST_CASE("heat: boundary forcing approaches the steady ramp") {
    HeatProblem p;
    p.f = FuncSpec::zero();
    p.g = FuncSpec::constant(Scalar(1));
    p.h = FuncSpec::zero();
    p.modes = 60;
    p.time_grid = {Scalar(14)};
    auto sol = heat_solve(p, true, 20);
    for (double x : {0.5, 1.5, 2.8}) {
        double expect = 1.0 - x / kPi;
        CHECK(testutil::close(sol.evaluate(Real(x, 20), 0), expect, 1e-6));
    }
    // mode coefficients approach 2/(pi n)
    for (long n : {1L, 2L, 5L})
        CHECK(testutil::close(sol.mode_coeffs[0][static_cast<std::size_t>(n - 1)],
                              2.0 / (kPi * n), 1e-6));
}

TEST_CASE("heat: accelerated and plain reconstructions agree") {
    HeatProblem p;
    p.f = FuncSpec::zero();
    p.g = FuncSpec::constant(Scalar(1));
    p.h = FuncSpec::constant(Scalar(Rational(1, 2)));
    p.modes = 220;
    p.time_grid = {Scalar(Rational(1, 2))};
    auto plain = heat_solve(p, false, 20);
    auto accel = heat_solve(p, true, 20);
    for (double x : {0.7, 1.6, 2.5}) {
        Real xr(x, 20);
        Real pv = plain.evaluate(xr, 0);
        Real av = accel.evaluate(xr, 0);
        Real est = plain.truncation_estimate(xr, 0);
        CHECK((pv - av).abs() < Real(10L, 20) * est + Real::exp10(-12, 20));
    }
}

TEST_CASE("heat: maximum principle spot check") {
    HeatProblem p;
    Real pi = Real::pi(30);
    p.f = FuncSpec::poly({Scalar(0), Scalar(pi), Scalar(-1L)}); // x(pi-x) >= 0
    p.g = FuncSpec::zero();
    p.h = FuncSpec::zero();
    p.modes = 40;
    p.time_grid = {Scalar(Rational(1, 10)), Scalar(1), Scalar(3)};
    auto sol = heat_solve(p, false, 20);
    double fmax = kPi * kPi / 4.0;
    for (std::size_t k = 0; k < p.time_grid.size(); ++k) {
        Real xr(0.1, 20);
        for (int i = 1; i <= 20; ++i) {
            double x = kPi * i / 21.0;
            double u = sol.evaluate(Real(x, 20), k).to_double();
            double eps = sol.truncation_estimate(Real(x, 20), k).to_double() + 1e-12;
            CHECK(u >= -eps);
            CHECK(u <= fmax + eps);
        }
        (void)xr;
    }
}

TEST_CASE("heat: accelerated residual decay check trips on a t = 0 corner") {
    HeatProblem p;
    p.f = FuncSpec::zero();
    p.g = FuncSpec::constant(Scalar(1)); // f(0) != g(0): corner mismatch
    p.h = FuncSpec::zero();
    p.modes = 64;
    p.time_grid = {Scalar(0)};
    CHECK_THROWS_AS(heat_solve(p, true, 20), ModeBudgetExceeded);
}

TEST_CASE("heat solver validates its inputs") {
    HeatProblem p;
    p.f = FuncSpec::zero();
    p.g = FuncSpec::zero();
    p.h = FuncSpec::zero();
    p.modes = 0;
    p.time_grid = {Scalar(1)};
    CHECK_THROWS_AS(heat_solve(p, false, 20), DomainError);
    p.modes = 4;
    p.time_grid = {Scalar(1), Scalar(Rational(1, 2))};
    CHECK_THROWS_AS(heat_solve(p, false, 20), DomainError);
}

TEST_CASE("function spec parsing") {
    CHECK(FuncSpec::parse("zero").is_zero());
    CHECK(FuncSpec::parse("one").kind() == FuncSpec::Kind::Constant);
    CHECK(FuncSpec::parse("sin").kind() == FuncSpec::Kind::Sine);
    CHECK(FuncSpec::parse("const:3/4").const_value().rational() == Rational(3, 4));
    CHECK(FuncSpec::parse("parabola").kind() == FuncSpec::Kind::Poly);
    CHECK_THROWS_AS(FuncSpec::parse("nope"), ParseError);
}

TEST_CASE("tail model validation: n^-3 residuals accepted, 1/n leftovers rejected") {
    int digits = 30;
    Real pi = Real::pi(digits + 10);
    SineSeries s;
    Rational c_odd(3, 2), c_even(1, 2);
    for (long n = 1; n <= 64; ++n) {
        Rational c = (n % 2) ? c_odd : c_even;
        Real model = Real(2L, digits + 10) * Real(c, digits + 10) / (pi * Real(n, digits + 10));
        Real bump = Real(Rational(1, n * n * n), digits + 10);
        s.coeffs.push_back(Scalar(model + bump));
    }
    auto tagged = s.with_tail_model(Scalar(c_even), Scalar(c_odd), digits);
    REQUIRE(tagged.tail_model.has_value());
    CHECK(tagged.tail_model->second.rational() == c_odd);
    // a wrong model leaves a 1/n residual behind
    CHECK_THROWS_AS(s.with_tail_model(Scalar(0), Scalar(0), digits), DomainError);
}

TEST_CASE("boundary term plus residual reconstructs f uniformly: f = x^2") {
    auto s = sine_coefficients(FuncSpec::poly({Scalar(0), Scalar(0), Scalar(1)}), 80, 30);
    auto [bt, res] = gibbs_accelerate(s, 30);
    CHECK(testutil::close(bt.f0, 0.0, 1e-8));
    CHECK(testutil::close(bt.fpi, kPi * kPi, 1e-6));
    for (double x : {0.05, 0.5, 1.5, 2.9, 3.10}) {
        Real xr(x, 25);
        double rebuilt = (bt.eval(xr) + res.eval(xr)).to_double();
        CHECK(std::fabs(rebuilt - x * x) < 1e-3);
    }
}

TEST_CASE("heat: time-varying boundary drives the Duhamel convolution") {
    // g(t) = sin t, h = 0, f = 0: for each mode, with a = n^2,
    //   a_n(t) = (2n/pi) (a sin t - cos t + e^{-a t})/(a^2 + 1).
    HeatProblem p;
    p.f = FuncSpec::zero();
    p.g = FuncSpec::callable([](const Real& t) { return t.sin(); }, "sin");
    p.h = FuncSpec::zero();
    p.modes = 6;
    p.time_grid = {Scalar(Rational(7, 10)), Scalar(2)};
    auto sol = heat_solve(p, false, 14);
    for (std::size_t k = 0; k < p.time_grid.size(); ++k) {
        double t = p.time_grid[k].to_double();
        for (long n = 1; n <= 6; ++n) {
            double a = double(n) * double(n);
            double expect = 2.0 * n / kPi *
                            (a * std::sin(t) - std::cos(t) + std::exp(-a * t)) /
                            (a * a + 1.0);
            CHECK(testutil::close(sol.mode_coeffs[k][static_cast<std::size_t>(n - 1)],
                                  expect, 1e-12));
        }
    }
}
