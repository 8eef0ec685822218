#include "sumkit/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "sumkit/errors.hpp"

namespace sumkit {

namespace {

// Legendre P_n and P_{n-1} at x via the three-term recurrence.
std::pair<Real, Real> legendre_pair(int n, const Real& x) {
    Real p0(1L, x.digits());
    Real p1 = x;
    if (n == 0) return {p0, Real(0L, x.digits())};
    for (int k = 1; k < n; ++k) {
        Real p2 = (Real(2L * k + 1, x.digits()) * x * p1 - Real(long(k), x.digits()) * p0) /
                  Real(long(k + 1), x.digits());
        p0 = p1;
        p1 = p2;
    }
    return {p1, p0};
}

} // namespace

const GaussRule& gauss_legendre(int n, int digits) {
    static std::map<std::pair<int, int>, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(n, digits);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    GaussRule rule;
    rule.nodes.assign(n, Real(digits));
    rule.weights.assign(n, Real(digits));
    const Real one(1L, digits);
    const Real two(2L, digits);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double guess = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        Real x(guess, digits);
        Real dp(digits);
        for (int iter = 0; iter < 64; ++iter) {
            auto [pn, pn1] = legendre_pair(n, x);
            // P'_n = n (x P_n - P_{n-1}) / (x^2 - 1)
            dp = Real(long(n), digits) * (x * pn - pn1) / (x * x - one);
            Real dx = pn / dp;
            x -= dx;
            if (dx.abs() < Real::exp10(-digits - 5, digits)) break;
        }
        auto [pn, pn1] = legendre_pair(n, x);
        dp = Real(long(n), digits) * (x * pn - pn1) / (x * x - one);
        Real w = two / ((one - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    auto [pos, inserted] = cache.emplace(key, std::move(rule));
    (void)inserted;
    return pos->second;
}

namespace {

Real gl_panels(const RealFunction& f, const Real& a, const Real& b, int panels, int order,
               int digits) {
    const GaussRule& rule = gauss_legendre(order, digits);
    Real total(0L, digits);
    Real width = (b - a) / Real(long(panels), digits);
    Real half = width / Real(2L, digits);
    for (int p = 0; p < panels; ++p) {
        Real mid = a + width * Real(long(p), digits) + half;
        Real acc(0L, digits);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
        total += acc * half;
    }
    return total;
}

} // namespace

Real quadrature_finite(const RealFunction& integrand, const Real& a, const Real& b, int digits,
                       int initial_panels) {
    const int work = digits + 8;
    const int order = 16;
    Real tol = Real::exp10(-digits, work);
    int panels = initial_panels;
    Real prev = gl_panels(integrand, a, b, panels, order, work);
    for (int level = 0; level < 11; ++level) {
        panels *= 2;
        Real cur = gl_panels(integrand, a, b, panels, order, work);
        Real scale = Real(1L, work) + cur.abs();
        if ((cur - prev).abs() < tol * scale) return cur;
        prev = cur;
    }
    throw ConvergenceFailure("finite quadrature did not stabilize at " +
                             std::to_string(digits) + " digits");
}

namespace {

// One trapezoid level of the double-exponential rule on [0, inf).
Real de_level(const RealFunction& f, double h, int work, const Real& tiny) {
    const Real c = Real::pi(work) / Real(2L, work);
    Real sum(0L, work);
    for (int dir : {+1, -1}) {
        int misses = 0;
        int growth = 0;
        Real prev_mag(0L, work);
        for (int k = (dir > 0 ? 0 : 1); k < 100000; ++k) {
            Real u(dir * k * h, work);
            Real sh = u.sinh();
            Real t = (c * sh).exp();
            Real w = c * u.cosh() * t;
            Real term = f(t) * w;
            sum += term;
            Real mag = term.abs();
            if (mag < tiny * (Real(1L, work) + sum.abs())) {
                if (++misses >= 3) break;
            } else {
                misses = 0;
            }
            // Past |u| ~ 3 every admissible integrand shrinks under the
            // substitution; sustained growth there means no tolerance can
            // ever be met.
            if (k * h > 3.0 && mag > prev_mag) {
                if (++growth >= 48)
                    throw ConvergenceFailure("integrand does not decay on the half line");
            } else {
                growth = 0;
            }
            prev_mag = mag;
        }
    }
    return sum * Real(h, work);
}

} // namespace

Scalar quadrature_semi_infinite(const RealFunction& integrand, int digits) {
    const int work = digits + 12;
    Real tol = Real::exp10(-digits, work);
    Real tiny = Real::exp10(-digits - 10, work);
    double h = 0.5;
    Real prev = de_level(integrand, h, work, tiny);
    for (int level = 0; level < 10; ++level) {
        h /= 2;
        Real cur = de_level(integrand, h, work, tiny);
        Real scale = Real(1L, work) + cur.abs();
        if ((cur - prev).abs() < tol * scale && level >= 1) return Scalar(cur);
        prev = cur;
    }
    throw ConvergenceFailure("semi-infinite quadrature did not stabilize at " +
                             std::to_string(digits) + " digits");
}

} // namespace sumkit
