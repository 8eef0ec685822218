#include "sumkit/physics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "sumkit/errors.hpp"
#include "sumkit/pade.hpp"
#include "sumkit/resum.hpp"

namespace sumkit {
namespace physics {

namespace {

constexpr long kAnharmonicOrderBound = 25;

// x^4 psi in the unnormalized basis u_m = (a^dag)^m |0>, where
// a u_m = m u_{m-1} and a^dag u_m = u_{m+1}; x^4 = (a + a^dag)^4 / 4.
std::vector<Rational> apply_x4(const std::vector<Rational>& d) {
    std::vector<Rational> cur = d;
    for (int pass = 0; pass < 4; ++pass) {
        std::vector<Rational> next(cur.size() + 1, Rational(0));
        for (std::size_t m = 0; m < cur.size(); ++m) {
            if (cur[m].is_zero()) continue;
            next[m + 1] += cur[m];                      // a^dag
            if (m >= 1) next[m - 1] += Rational(static_cast<long>(m)) * cur[m]; // a
        }
        cur = std::move(next);
    }
    Rational quarter(1, 4);
    for (Rational& v : cur) v *= quarter;
    return cur;
}

} // namespace

CoefficientSequence PerturbationSeries::as_sequence() const {
    return CoefficientSequence(coeffs, SignConvention::AsIs,
                               subtracted ? "anharmonic-F" : "anharmonic-E");
}

PerturbationSeries anharmonic_coefficients(long K) {
    if (K < 0) throw DomainError("anharmonic_coefficients needs K >= 0");
    if (K > kAnharmonicOrderBound)
        throw ResourceLimit("anharmonic order " + std::to_string(K) + " beyond bound " +
                            std::to_string(kAnharmonicOrderBound));
    // psi_k = sum_m d[k][m] u_m with d[k][0] = 0 for k >= 1;
    // m d[k][m] = sum_{j=1..k-1} E_j d[k-j][m] - (x^4 psi_{k-1})_m,
    // E_k = (x^4 psi_{k-1})_0.
    std::vector<std::vector<Rational>> d;
    d.push_back({Rational(1)});
    std::vector<Rational> energy{Rational(1, 2)};
    for (long k = 1; k <= K; ++k) {
        std::vector<Rational> v = apply_x4(d[static_cast<std::size_t>(k - 1)]);
        energy.push_back(v[0]);
        std::size_t support = 4 * static_cast<std::size_t>(k) + 1;
        std::vector<Rational> dk(support, Rational(0));
        for (std::size_t m = 1; m < support; ++m) {
            Rational acc = m < v.size() ? -v[m] : Rational(0);
            for (long j = 1; j < k; ++j) {
                const auto& prev = d[static_cast<std::size_t>(k - j)];
                if (m < prev.size()) acc += energy[static_cast<std::size_t>(j)] * prev[m];
            }
            dk[m] = acc / Rational(static_cast<long>(m));
        }
        d.push_back(std::move(dk));
    }
    PerturbationSeries out;
    out.subtracted = false;
    out.coeffs.reserve(energy.size());
    for (Rational& e : energy) out.coeffs.emplace_back(std::move(e));
    return out;
}

PerturbationSeries anharmonic_f_series(long K) {
    PerturbationSeries e = anharmonic_coefficients(K + 1);
    PerturbationSeries f;
    f.subtracted = true;
    f.coeffs.assign(e.coeffs.begin() + 1, e.coeffs.end());
    return f;
}

Scalar anharmonic_asymptotic(long n, int digits) {
    if (n < 1) throw DomainError("anharmonic_asymptotic needs n >= 1");
    // Gamma(n + 1/2) = (2n)! sqrt(pi) / (4^n n!), so the pi^{-3/2} and
    // sqrt(pi) collapse to 1/pi and everything else stays rational.
    Rational gamma_rat = Rational::factorial(static_cast<unsigned long>(2 * n)) /
                         (Rational(4).pow_int(n) *
                          Rational::factorial(static_cast<unsigned long>(n)));
    Rational mag_rat = Rational(3).pow_int(n) * gamma_rat;
    Real value = Real(6L, digits).sqrt() / Real::pi(digits) * Real(mag_rat, digits);
    if (n % 2 == 0) value = -value; // sign (-1)^{n+1}
    return Scalar(value);
}

std::vector<std::pair<std::string, Scalar>> anharmonic_pade_table(long depth) {
    if (depth < 1) throw DomainError("pade table depth must be >= 1");
    PerturbationSeries f = anharmonic_f_series(2 * depth);
    auto stairs = pade::staircase_evaluate(f.as_sequence(), Scalar(1), depth);
    std::vector<std::pair<std::string, Scalar>> out;
    Scalar half(Rational(1, 2));
    for (std::size_t i = 1; i < stairs.size(); ++i) // skip the [0/0] entry
        out.emplace_back(stairs[i].first, half + stairs[i].second);
    return out;
}

Scalar diagram_count(long n) {
    if (n < 1) throw DomainError("diagram_count needs n >= 1");
    Rational num = Rational::double_factorial(static_cast<unsigned long>(4 * n - 1));
    Rational den = Rational::factorial(static_cast<unsigned long>(n)) *
                   Rational(24).pow_int(n);
    return Scalar(num / den);
}

std::pair<Scalar, Scalar> casimir_force(const Scalar& L, int digits) {
    if (L.sign() <= 0) throw DomainError("casimir_force needs L > 0");
    Scalar zeta3 = resum::zeta_negative(3); // 1/120
    Real pi2 = Real::pi(digits) * Real::pi(digits);
    // E/A = -(pi^2 / (6 L^3)) zeta(-3); f = -d(E/A)/dL = 3 (E/A)/L.
    Scalar energy = -(Scalar(pi2) / (Scalar(6) * L.pow_int(3))) * zeta3;
    Scalar force = Scalar(3) * energy / L;
    return {energy, force};
}

TwoLevelSpectrum two_level_spectrum(const TwoLevelSystem& sys, const ComplexReal& eps) {
    if (sys.c.is_zero()) throw DomainError("two-level system needs c != 0");
    int digits = eps.re.digits();
    Real a = sys.a.real(digits), b = sys.b.real(digits), c = sys.c.real(digits);
    ComplexReal diff{a - b, Real(0L, digits)};
    ComplexReal four_c2{Real(4L, digits) * c * c, Real(0L, digits)};
    ComplexReal disc = diff * diff + four_c2 * eps * eps;
    ComplexReal root = disc.sqrt();
    ComplexReal sum{a + b, Real(0L, digits)};
    ComplexReal two{Real(2L, digits), Real(0L, digits)};
    TwoLevelSpectrum spec{
        (sum + root) / two,
        (sum - root) / two,
        ComplexReal{Real(0L, digits), (a - b) / (Real(2L, digits) * c)},
        ComplexReal{Real(0L, digits), -((a - b) / (Real(2L, digits) * c))},
    };
    return spec;
}

namespace {

// Truncated fifth power of a series (constant term must be nonzero only
// for the regular variant).
std::vector<Rational> pow5_truncated(const std::vector<Rational>& s, long order) {
    std::vector<Rational> acc{Rational(1)};
    for (int i = 0; i < 5; ++i) {
        std::vector<Rational> next(std::min<std::size_t>(acc.size() + s.size() - 1,
                                                         static_cast<std::size_t>(order) + 1),
                                   Rational(0));
        for (std::size_t p = 0; p < acc.size(); ++p) {
            if (acc[p].is_zero()) continue;
            for (std::size_t q = 0; q < s.size() && p + q < next.size(); ++q)
                next[p + q] += acc[p] * s[q];
        }
        acc = std::move(next);
    }
    acc.resize(static_cast<std::size_t>(order) + 1, Rational(0));
    return acc;
}

double runaway_scaling_report(double eps) {
    // Durand-Kerner on eps z^5 + z - 1; mean |z| eps^{1/4} over the four
    // complex roots.
    using C = std::complex<double>;
    std::vector<C> r(5);
    C seed(0.4, 0.9);
    C acc(1.0, 0.0);
    for (int i = 0; i < 5; ++i) {
        acc *= seed;
        r[static_cast<std::size_t>(i)] = acc;
    }
    auto poly = [&](C z) { return eps * std::pow(z, 5) + z - 1.0; };
    for (int iter = 0; iter < 300; ++iter) {
        for (int i = 0; i < 5; ++i) {
            C num = poly(r[static_cast<std::size_t>(i)]) / eps;
            C den(1.0, 0.0);
            for (int j = 0; j < 5; ++j)
                if (j != i) den *= r[static_cast<std::size_t>(i)] - r[static_cast<std::size_t>(j)];
            r[static_cast<std::size_t>(i)] -= num / den;
        }
    }
    double scale = 0;
    int counted = 0;
    for (const C& z : r)
        if (std::fabs(z.imag()) > 1e-8) {
            scale += std::abs(z) * std::pow(eps, 0.25);
            ++counted;
        }
    return counted > 0 ? scale / counted : 0.0;
}

} // namespace

Real quintic_bisection_root(const Real& a5, const Real& a1, const Real& a0, const Real& lo_in,
                            const Real& hi_in, int digits) {
    Real lo = lo_in, hi = hi_in;
    auto p = [&](const Real& x) { return a5 * x.pow_int(5) + a1 * x + a0; };
    if (p(lo).sign() > 0 || p(hi).sign() < 0) throw DomainError("bisection bracket invalid");
    long iters = static_cast<long>(digits * 3.33) + 8;
    Real two(2L, digits + 5);
    for (long i = 0; i < iters; ++i) {
        Real mid = (lo + hi) / two;
        if (p(mid).sign() <= 0)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / two;
}

QuinticReport quintic_root_study(QuinticVariant variant, long K, const Scalar& eps, int digits) {
    if (K < 1) throw DomainError("quintic study needs K >= 1");
    if (K > 400) throw ResourceLimit("quintic order " + std::to_string(K) + " beyond bound 400");
    QuinticReport rep;
    rep.variant = variant;
    const int work = digits + 5;

    if (variant == QuinticVariant::Regular) {
        // x^5 + eps x - 1 = 0, x = 1 + a_1 eps + ...; order n >= 1:
        // 5 a_n + [x^5 | a_n = 0]_n + a_{n-1} = 0.
        std::vector<Rational> a{Rational(1)};
        for (long n = 1; n <= K; ++n) {
            a.push_back(Rational(0));
            std::vector<Rational> p5 = pow5_truncated(a, n);
            a[static_cast<std::size_t>(n)] =
                -(p5[static_cast<std::size_t>(n)] + a[static_cast<std::size_t>(n - 1)]) /
                Rational(5);
        }
        for (const Rational& v : a) rep.coeffs.emplace_back(v);
        // radius (5/4)^{4/5}
        Real ratio(Rational(5, 4), work);
        rep.radius = Scalar((ratio.log() * Real(Rational(4, 5), work)).exp());
        Scalar sum(0), pw(1);
        for (long n = 0; n <= K; ++n) {
            sum += rep.coeffs[static_cast<std::size_t>(n)] * pw;
            pw *= eps;
        }
        rep.partial_sum = sum;
        rep.reference_root = Scalar(quintic_bisection_root(
            Real(1L, work), eps.real(work), Real(-1L, work), Real(0L, work), Real(2L, work),
            digits));
        return rep;
    }

    // Singular: eps x^5 + x - 1 = 0, x = 1 + c_1 eps + ...; order n >= 1:
    // c_n = -[x^5]_{n-1}.
    std::vector<Rational> c{Rational(1)};
    for (long n = 1; n <= K; ++n) {
        std::vector<Rational> p5 = pow5_truncated(c, n - 1);
        c.push_back(-p5[static_cast<std::size_t>(n - 1)]);
    }
    for (const Rational& v : c) rep.coeffs.emplace_back(v);
    rep.radius = Scalar(Rational(256, 3125));
    Scalar sum(0), pw(1);
    for (long n = 0; n <= K; ++n) {
        sum += rep.coeffs[static_cast<std::size_t>(n)] * pw;
        pw *= eps;
    }
    rep.partial_sum = sum;
    rep.reference_root = Scalar(quintic_bisection_root(
        eps.real(work), Real(1L, work), Real(-1L, work), Real(0L, work), Real(2L, work),
        digits));

    // Surviving-root series s(delta), delta = eps^{1/4}: s + s^5 = delta.
    std::vector<Rational> d{Rational(0), Rational(1)};
    for (long n = 2; n <= K; ++n) {
        std::vector<Rational> p5 = pow5_truncated(d, n);
        d.push_back(-p5[static_cast<std::size_t>(n)]);
    }
    for (const Rational& v : d) rep.delta_series.emplace_back(v);

    // Staircase Pade rescue of the divergent direct series at eps.
    long depth = std::min<long>((K - 1) / 2, 24);
    if (depth >= 1) {
        CoefficientSequence cs(rep.coeffs, SignConvention::AsIs, "quintic-singular");
        rep.staircase = pade::staircase_evaluate(cs, eps, depth);
    }
    rep.runaway_scaling = runaway_scaling_report(eps.to_double());
    return rep;
}

} // namespace physics
} // namespace sumkit
