// Acceptance suite: runs every criterion at its stated tolerance and
// prints one PASS/FAIL line each. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sumkit/accel.hpp"
#include "sumkit/fourier.hpp"
#include "sumkit/pade.hpp"
#include "sumkit/physics.hpp"
#include "sumkit/resum.hpp"
#include "sumkit/sequence.hpp"

using namespace sumkit;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> notes;
};

struct Harness {
    int failures = 0;

    void run(int id, const std::string& label, double budget_seconds,
             const std::function<Outcome()>& fn) {
        using clock = std::chrono::steady_clock;
        auto t0 = clock::now();
        Outcome out;
        try {
            out = fn();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(clock::now() - t0).count();
        if (secs > budget_seconds) {
            out.pass = false;
            out.detail += (out.detail.empty() ? "" : "; ") + std::string("runtime ") +
                          std::to_string(secs) + " s exceeds " +
                          std::to_string(budget_seconds) + " s";
        }
        std::printf("%s criterion %2d: %s (%.2f s)%s%s\n", out.pass ? "PASS" : "FAIL", id,
                    label.c_str(), secs, out.detail.empty() ? "" : " -- ",
                    out.detail.c_str());
        for (const auto& n : out.notes) std::printf("        note: %s\n", n.c_str());
        if (!out.pass) ++failures;
    }
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

Outcome require(bool ok, const std::string& detail) {
    Outcome o;
    o.pass = ok;
    o.detail = detail;
    return o;
}

Outcome criterion_euler_numbers() {
    pade::MomentSequence m({Scalar(1), Scalar(1), Scalar(5), Scalar(61)});
    auto cf = pade::moments_to_contfrac(m);
    bool ok = cf.b.size() == 3 && cf.b[0].rational() == Rational(1) &&
              cf.b[1].rational() == Rational(4) && cf.b[2].rational() == Rational(9);
    pade::ContFracCoeffs ext{{Scalar(1), Scalar(4), Scalar(9), Scalar(16)}, false};
    auto back = pade::contfrac_to_moments(ext, 4);
    ok = ok && back.a()[4].rational() == Rational(1385);
    return require(ok, "b = (1,4,9), a_4 = 1385 exactly");
}

Outcome criterion_table1() {
    // From the four printed coefficients alone:
    CoefficientSequence F(
        {Scalar(Rational(3, 4)), Scalar(Rational(21, 8)), Scalar(Rational(333, 16))},
        SignConvention::AlternatingImplied, "F4");
    Scalar half(Rational(1, 2));
    Scalar p01 = half + pade::pade_approximant(F, 0, 1).eval(Scalar(1));
    Scalar p11 = half + pade::pade_approximant(F, 1, 1).eval(Scalar(1));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5f", p01.to_double());
    bool ok = std::string(buf) == "0.66667";
    std::snprintf(buf, sizeof buf, "%.5f", p11.to_double());
    ok = ok && std::string(buf) == "0.95600";

    // With recursion-generated coefficients through order 9:
    auto table = physics::anharmonic_pade_table(4);
    const double expect[] = {0.66667, 0.95600, 0.73385, 0.87411,
                             0.76506, 0.84110, 0.78102, 0.82529};
    double worst = 0;
    for (std::size_t i = 0; i < 8; ++i)
        worst = std::max(worst, std::fabs(table[i].second.to_double() - expect[i]));
    ok = ok && worst <= 1e-4;
    return require(ok, "5-decimal entries match, table max dev " + fmt(worst));
}

Outcome criterion_cross_method() {
    const Rational expect[] = {Rational(1, 2), Rational(1, 4), Rational(0), Rational(-1, 8)};
    bool ok = true;
    for (long p = 0; p <= 3; ++p) {
        Scalar closed = resum::borel_sum_closed(p);
        auto euler = resum::euler_sum(alternating_power_series(p), 30);
        ok = ok && closed.rational() == expect[p];
        ok = ok && euler.value.is_exact() && euler.value.rational() == expect[p];
        ok = ok && resum::euler_alternating_power(p).rational() == expect[p];
    }
    Scalar g3 = resum::generic_sum_periodic({Scalar(1), Scalar(-1), Scalar(0)});
    auto e3 = resum::euler_sum(periodic_series({Scalar(1), Scalar(-1), Scalar(0)}), 30);
    ok = ok && g3.rational() == Rational(1, 3) && e3.value.is_exact() &&
         e3.value.rational() == Rational(1, 3);
    Scalar g5 =
        resum::generic_sum_periodic({Scalar(1), Scalar(0), Scalar(-1), Scalar(0), Scalar(0)});
    auto e5 = resum::euler_sum(
        periodic_series({Scalar(1), Scalar(0), Scalar(-1), Scalar(0), Scalar(0)}), 30);
    ok = ok && g5.rational() == Rational(2, 5) && e5.value.is_exact() &&
         e5.value.rational() == Rational(2, 5);
    return require(ok, "euler, borel and generic agree exactly on 1/2, 1/4, 0, -1/8, 1/3, 2/5");
}

Outcome criterion_shanks_log2() {
    auto sums = partial_sums(catalog_series("log2"), Scalar(1), 7);
    auto table = accel::shanks(sums, 3);
    double ln2 = std::log(2.0);
    double accel_err = std::fabs(table.best().to_double() - ln2);
    double raw_err = std::fabs(sums[7].to_double() - ln2);
    bool ok = accel_err < 1e-4 && raw_err > 5e-2;
    return require(ok, "|S^3 - ln 2| = " + fmt(accel_err) + ", raw error " + fmt(raw_err) +
                           " (improvement " + fmt(raw_err / accel_err) + "x)");
}

Outcome criterion_richardson_basel() {
    auto sums = partial_sums(catalog_series("basel"), Scalar(1), 12);
    double target = M_PI * M_PI / 6.0;
    double err = std::fabs(accel::richardson(sums, 3, 10).to_double() - target);
    double raw = std::fabs(sums[9].to_double() - target);
    bool ok = err < 1e-5 && std::fabs(raw - 9.5e-2) < 5e-3;
    return require(ok, "order-3 error " + fmt(err) + " vs raw " + fmt(raw));
}

Outcome criterion_stieltjes_bracketing() {
    double oracle = oracles::semi_infinite_simpson(
        [](double t) { return std::exp(-t) / (1.0 + t); }, 1e-11);
    auto stairs = pade::staircase_evaluate(catalog_series("euler-factorial"), Scalar(1), 12);
    std::vector<double> diag, sub;
    for (std::size_t i = 0; i < stairs.size(); i += 2)
        diag.push_back(stairs[i].second.to_double());
    for (std::size_t i = 1; i < stairs.size(); i += 2)
        sub.push_back(stairs[i].second.to_double());
    bool ok = true;
    for (std::size_t i = 1; i < diag.size(); ++i) ok = ok && diag[i] < diag[i - 1];
    for (std::size_t i = 1; i < sub.size(); ++i) ok = ok && sub[i] > sub[i - 1];
    double dd = std::fabs(diag.back() - oracle);
    double ds = std::fabs(sub.back() - oracle);
    ok = ok && dd < 1e-3 && ds < 1e-3;
    return require(ok, "[12/12] off by " + fmt(dd) + ", [12/13] off by " + fmt(ds) +
                           ", oracle " + fmt(oracle));
}

Outcome criterion_heat() {
    fourier::HeatProblem p;
    p.f = fourier::FuncSpec::zero();
    p.g = fourier::FuncSpec::constant(Scalar(1));
    p.h = fourier::FuncSpec::zero();
    p.modes = 100;
    p.time_grid = {Scalar(Rational(1, 2)), Scalar(5)};
    auto sol = fourier::heat_solve(p, true, 18);

    const int fd_points = 2000;
    auto fd = oracles::heat_crank_nicolson([](double) { return 0.0; },
                                           [](double) { return 1.0; },
                                           [](double) { return 0.0; }, fd_points,
                                           {0.5, 5.0}, 2.5e-4);
    double dev_fd = 0;
    for (std::size_t i = 0; i < fd.xs.size(); i += 2) {
        double u = sol.evaluate(Real(fd.xs[i], 16), 0).to_double();
        dev_fd = std::max(dev_fd, std::fabs(u - fd.values[0][i]));
    }
    double dev_steady = 0;
    const double pi = M_PI;
    for (std::size_t i = 0; i < fd.xs.size(); i += 2) {
        double u = sol.evaluate(Real(fd.xs[i], 16), 1).to_double();
        dev_steady = std::max(dev_steady, std::fabs(u - (1.0 - fd.xs[i] / pi)));
    }
    bool ok = dev_fd < 1e-4 && dev_steady < 1e-6;
    Outcome o = require(ok, "t=0.5 max dev vs FD " + fmt(dev_fd) +
                                "; t=5 profile vs 1 - x/pi " + fmt(dev_steady) +
                                " (tolerance 1e-6)");
    // Diagnostics for the t = 5 clause: the true solution itself sits
    // (2/pi) e^{-5} ~ 4.3e-3 away from the steady ramp, so the clause
    // cannot be met by a correct solver; the solver does match the FD
    // oracle at t = 5 and reaches the ramp by t = 14.
    double dev_fd5 = 0;
    for (std::size_t i = 0; i < fd.xs.size(); i += 2) {
        double u = sol.evaluate(Real(fd.xs[i], 16), 1).to_double();
        dev_fd5 = std::max(dev_fd5, std::fabs(u - fd.values[1][i]));
    }
    o.notes.push_back("solver vs FD oracle at t=5: max dev " + fmt(dev_fd5));
    o.notes.push_back("analytic distance of u(.,5) from the ramp: (2/pi)e^{-5} = " +
                      fmt(2.0 / pi * std::exp(-5.0)));
    fourier::HeatProblem late = p;
    late.time_grid = {Scalar(14)};
    auto sol14 = fourier::heat_solve(late, true, 18);
    double dev14 = 0;
    for (int i = 1; i < 40; ++i) {
        double x = pi * i / 40.0;
        double u = sol14.evaluate(Real(x, 16), 0).to_double();
        dev14 = std::max(dev14, std::fabs(u - (1.0 - x / pi)));
    }
    o.notes.push_back("t=14 profile vs ramp: max dev " + fmt(dev14) + " (< 1e-6: " +
                      (dev14 < 1e-6 ? "yes" : "no") + ")");
    return o;
}

Outcome criterion_gibbs() {
    double si_pi = oracles::adaptive_simpson(
        [](double s) { return s == 0 ? 1.0 : std::sin(s) / s; }, 0.0, M_PI, 1e-12);
    double independent = 2.0 / M_PI * si_pi;
    double v = fourier::gibbs_overshoot(Scalar(Real(M_PI, 30)), 14).to_double();
    bool ok = std::fabs(v - independent) < 1e-10 && std::fabs(v - 1.17898) < 1e-5;
    double big = fourier::gibbs_overshoot(Scalar(200), 12).to_double();
    ok = ok && std::fabs(big - 1.0) < 1e-2;
    return require(ok, "(2/pi) Si(pi) = " + fmt(v) + ", large-argument value " + fmt(big));
}

Outcome criterion_zeta_casimir() {
    bool ok = resum::zeta_negative(3).rational() == Rational(1, 120);
    auto [energy, force] = physics::casimir_force(Scalar(1), 40);
    double pi2 = M_PI * M_PI;
    ok = ok && std::fabs(energy.to_double() + pi2 / 720.0) < 1e-14;
    ok = ok && std::fabs(force.to_double() + pi2 / 240.0) < 1e-14;
    // finite-difference derivative of the energy
    int d = 40;
    Real h = Real::exp10(-8, d);
    Real L(1L, d);
    auto ev = [&](const Real& x) {
        return physics::casimir_force(Scalar(x), d).first.real(d);
    };
    Real deriv = -((ev(L + h) - ev(L - h)) / (Real(2L, d) * h));
    double fd_err = std::fabs((deriv - force.real(d)).to_double());
    ok = ok && fd_err < 1e-8;
    return require(ok, "zeta(-3) = 1/120, E/A and f at L = 1, FD derivative off by " +
                           fmt(fd_err));
}

Outcome criterion_quintic() {
    auto reg = physics::quintic_root_study(physics::QuinticVariant::Regular, 60, Scalar(1), 20);
    double root = 0.754877666246693;
    double reg_err = std::fabs(reg.partial_sum.to_double() - root);
    bool ok = reg_err < 1e-4 && std::fabs(reg.reference_root.to_double() - root) < 1e-10;

    auto sing =
        physics::quintic_root_study(physics::QuinticVariant::Singular, 41, Scalar(1), 20);
    // raw partial sums exceed any bound: check growth across prefixes
    Scalar s20(0), pw(1);
    for (long n = 0; n <= 20; ++n) {
        s20 += sing.coeffs[static_cast<std::size_t>(n)] * pw;
    }
    double tail_mag = std::fabs(sing.partial_sum.to_double());
    ok = ok && tail_mag > 1e10 && tail_mag > 1e6 * std::fabs(s20.to_double());
    double pade_err = std::fabs(sing.staircase.back().second.to_double() - root);
    ok = ok && pade_err < 1e-4;
    return require(ok, "regular sum off by " + fmt(reg_err) + "; singular |A_41| = " +
                           fmt(tail_mag) + ", staircase off by " + fmt(pade_err));
}

Outcome criterion_asymptotic_ratio() {
    auto e = physics::anharmonic_coefficients(20);
    auto ratio = [&](long n) {
        return std::fabs(e.coeffs[static_cast<std::size_t>(n)].to_double()) /
               std::fabs(physics::anharmonic_asymptotic(n, 30).to_double());
    };
    double r10 = ratio(10), r20 = ratio(20);
    bool ok = std::fabs(r20 - 1.0) < std::fabs(r10 - 1.0) && std::fabs(r20 - 1.0) < 0.2;
    return require(ok, "ratio(10) = " + fmt(r10) + ", ratio(20) = " + fmt(r20));
}

} // namespace

int main() {
    Harness h;
    h.run(1, "Euler-number roundtrip through the continued fraction", 1.0,
          criterion_euler_numbers);
    h.run(2, "ground-state Pade table reproduction", 10.0, criterion_table1);
    h.run(3, "cross-method agreement on alternating powers and patterns", 30.0,
          criterion_cross_method);
    h.run(4, "Shanks acceleration of the log 2 series", 1.0, criterion_shanks_log2);
    h.run(5, "order-3 Richardson on the Basel series at N = 10", 1.0,
          criterion_richardson_basel);
    h.run(6, "Stieltjes staircase bracketing for the factorial series", 5.0,
          criterion_stieltjes_bracketing);
    h.run(7, "heat equation with boundary forcing vs finite differences", 30.0,
          criterion_heat);
    h.run(8, "Gibbs overshoot constant", 1.0, criterion_gibbs);
    h.run(9, "zeta regularization and the Casimir force", 5.0, criterion_zeta_casimir);
    h.run(10, "quintic root: regular sum and singular Pade rescue", 5.0, criterion_quintic);
    h.run(11, "large-order asymptotics of the anharmonic coefficients", 60.0,
          criterion_asymptotic_ratio);
    if (h.failures > 0) {
        std::printf("%d criterion(s) failed\n", h.failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
