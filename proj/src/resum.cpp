#include "sumkit/resum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sumkit/accel.hpp"
#include "sumkit/bernoulli.hpp"
#include "sumkit/errors.hpp"
#include "sumkit/pade.hpp"
#include "sumkit/quadrature.hpp"

namespace sumkit {
namespace resum {

SummationResult::SummationResult(Scalar v, Method m, std::vector<std::string> diag)
    : value(std::move(v)), method(m), diagnostics(std::move(diag)) {
    if (!value.is_exact() && diagnostics.empty())
        throw DomainError("non-exact summation result needs diagnostics");
}

ExpPolynomial ExpPolynomial::apply_theta() const {
    std::vector<Scalar> out(coeffs_.size() + 1, Scalar(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out[k] += Scalar(static_cast<long>(k)) * coeffs_[k];
        out[k + 1] -= Scalar(weight_) * coeffs_[k];
    }
    return ExpPolynomial(std::move(out), weight_);
}

ExpPolynomial ExpPolynomial::times_exp() const {
    return ExpPolynomial(coeffs_, weight_ + 1);
}

Scalar ExpPolynomial::integrate() const {
    if (weight_ <= 0) throw DomainError("exp-polynomial integral needs positive weight");
    Scalar acc(0);
    Rational wk(weight_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        Rational term = Rational::factorial(static_cast<unsigned long>(k)) /
                        wk.pow_int(static_cast<long>(k) + 1);
        acc += coeffs_[k] * Scalar(term);
    }
    return acc;
}

namespace {

// Strict sign alternation over the first `probe` terms (no zeros).
bool strictly_alternating(const CoefficientSequence& seq, long probe) {
    int expected = 0;
    for (long n = 0; n < probe; ++n) {
        if (!seq.extendable_to(n)) return true; // short explicit series
        int s = seq.signed_term(n).sign();
        if (s == 0) return false;
        if (n == 0)
            expected = s;
        else if (s != ((n % 2 == 0) ? expected : -expected))
            return false;
    }
    return true;
}

// Radius-of-convergence precheck from coefficient ratios; a divergent
// factorial-type series has no Abel limit to extrapolate.
void check_positive_radius(const CoefficientSequence& seq) {
    double worst = 0;
    long checked = 0;
    for (long n = 20; n < 36 && seq.extendable_to(n + 1); ++n) {
        double an = std::fabs(seq.signed_term(n).to_double());
        double an1 = std::fabs(seq.signed_term(n + 1).to_double());
        if (an > 0 && an1 > 0) {
            worst = std::max(worst, an1 / an);
            ++checked;
        }
    }
    if (checked > 4 && worst > 20.0)
        throw ConvergenceFailure("coefficient ratios grow like " + std::to_string(worst) +
                                 "; the power series has no positive radius");
}

// Eventually-periodic structure of the signed coefficient stream:
// prefix of length q, then a block of length p repeating forever.
struct PeriodicShape {
    long prefix;
    long period;
};

std::optional<PeriodicShape> detect_periodic(const CoefficientSequence& seq) {
    const long scan = 200;
    if (!seq.extendable_to(3 * scan)) return std::nullopt;
    std::vector<Scalar> t;
    for (long n = 0; n < scan; ++n) {
        Scalar v = seq.signed_term(n);
        if (!v.is_exact()) return std::nullopt;
        t.push_back(std::move(v));
    }
    auto persists = [&](const PeriodicShape& shape) {
        // The window match must continue past it: through every stored
        // term for explicit sequences, through 3x the window for
        // generated ones.
        long last = seq.has_generator() ? 3 * scan : seq.stored_size();
        for (long n = scan - shape.period; n + shape.period < last; ++n) {
            Scalar a = seq.signed_term(n);
            Scalar b = seq.signed_term(n + shape.period);
            if (!a.is_exact() || !b.is_exact() || a != b) return false;
        }
        return true;
    };
    for (long q = 0; q <= 64; ++q)
        for (long p = 1; p <= 64 && q + 2 * p <= scan; ++p) {
            bool ok = true;
            for (long n = q; n + p < scan && ok; ++n)
                if (t[static_cast<std::size_t>(n)] != t[static_cast<std::size_t>(n + p)])
                    ok = false;
            if (ok && persists(PeriodicShape{q, p})) return PeriodicShape{q, p};
        }
    return std::nullopt;
}

// Sum of seq at x (0 < x < 1): closed form for eventually periodic
// streams, averaging for alternating series, and direct summation with a
// windowed geometric tail bound otherwise.
Real abel_point_value(const CoefficientSequence& seq, const Real& x, bool alternating,
                      int work, long ladder_j, const std::optional<PeriodicShape>& shape) {
    Real tol = Real::exp10(-(work - 3), work);
    if (shape) {
        // prefix + x^q C(x) / (1 - x^p) with C the one-block polynomial
        Real head(0L, work);
        Real xp(1L, work);
        for (long n = 0; n < shape->prefix; ++n) {
            head += seq.signed_term(n).real(work) * xp;
            xp *= x;
        }
        Real block(0L, work);
        Real bp(1L, work);
        for (long n = shape->prefix; n < shape->prefix + shape->period; ++n) {
            block += seq.signed_term(n).real(work) * bp;
            bp *= x;
        }
        return head + xp * block / (Real(1L, work) - bp);
    }
    if (alternating) {
        long len = 48 + static_cast<long>(1.6 * (work * 2.302585) /
                                          ((double(ladder_j) + 1.0) * 0.693147));
        for (int attempt = 0; attempt < 3; ++attempt, len *= 2) {
            if (!seq.extendable_to(len)) break;
            std::vector<Real> s;
            s.reserve(static_cast<std::size_t>(len));
            Real acc(0L, work);
            Real xp(1L, work);
            for (long n = 0; n < len; ++n) {
                acc += seq.signed_term(n).real(work) * xp;
                s.push_back(acc);
                xp *= x;
            }
            Real prev = s[0];
            int streak = 0;
            for (std::size_t pass = 1; pass < s.size(); ++pass) {
                for (std::size_t i = 0; i + pass < s.size(); ++i)
                    s[i] = (s[i] + s[i + 1]) / Real(2L, work);
                Real diff = (s[0] - prev).abs();
                if (diff < tol * (Real(1L, work) + s[0].abs())) {
                    if (++streak >= 2) return s[0];
                } else {
                    streak = 0;
                }
                prev = s[0];
            }
        }
        throw ConvergenceFailure("alternating ladder sum did not stabilize");
    }
    // Direct path: stop once a windowed max-term bound on the tail is
    // small. Block maxima lag by at most two windows, which only makes
    // the bound conservative.
    Real one(1L, work);
    Real acc(0L, work);
    Real xp(1L, work);
    Real block_max(0L, work);
    Real prev_block_max(0L, work);
    const int window = 64;
    long n_cap = 4000 + static_cast<long>((double(work) + 4.0) * 2.302585 *
                                          std::pow(2.0, double(ladder_j)));
    int in_block = 0;
    for (long n = 0; n <= n_cap; ++n) {
        Real coeff = seq.signed_term(n).real(work);
        acc += coeff * xp;
        Real mag = coeff.abs();
        if (mag > block_max) block_max = mag;
        if (++in_block == window) {
            prev_block_max = block_max;
            block_max = Real(0L, work);
            in_block = 0;
        }
        xp *= x;
        if (n >= 2 * window) {
            Real recent = block_max > prev_block_max ? block_max : prev_block_max;
            Real bound = Real(10L, work) * recent * xp / (one - x);
            if (bound < tol * (one + acc.abs())) return acc;
        }
    }
    throw ConvergenceFailure("series at ladder point did not converge within term budget");
}

// Best rational with small denominator within eps of v, via continued
// fraction convergents.
std::optional<Rational> snap_to_rational(const Real& v, const Real& eps, long qmax) {
    int work = v.digits();
    mpfr_t x, fl;
    mpfr_init2(x, Real::bits(work));
    mpfr_init2(fl, Real::bits(work));
    mpfr_set(x, v.raw(), MPFR_RNDN);
    Rational p_prev(0), q_prev(1), p_cur(1), q_cur(0); // h_{-2}/k_{-2}, h_{-1}/k_{-1}
    std::optional<Rational> result;
    for (int it = 0; it < 64; ++it) {
        mpfr_floor(fl, x);
        long a = mpfr_get_si(fl, MPFR_RNDN);
        Rational p_next = Rational(a) * p_cur + p_prev;
        Rational q_next = Rational(a) * q_cur + q_prev;
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
        if (q_cur > Rational(qmax)) break;
        Rational cand = p_cur / q_cur;
        Real err = (v - Real(cand, work)).abs();
        if (err < eps) {
            result = cand;
            break;
        }
        mpfr_sub(x, x, fl, MPFR_RNDN);
        if (mpfr_zero_p(x)) break;
        mpfr_ui_div(x, 1, x, MPFR_RNDN);
        if (!mpfr_number_p(x)) break;
    }
    mpfr_clear(x);
    mpfr_clear(fl);
    return result;
}

} // namespace

SummationResult euler_sum(const CoefficientSequence& seq, int digits) {
    if (digits < 5) throw DomainError("euler_sum needs digits >= 5");
    check_positive_radius(seq);
    const int work = digits + 15;
    const std::optional<PeriodicShape> shape = detect_periodic(seq);
    const bool alternating = !shape && strictly_alternating(seq, 30);
    const long j_max = 18;
    Real conv_tol = Real::exp10(-(digits + 5), work);

    std::vector<Scalar> ladder;
    Scalar extrapolated(0);
    Scalar correction(0);
    bool converged = false;
    long j_used = 0;
    const double term_budget = 4e7;
    if (!shape && !alternating) {
        // Direct summation costs ~2^j (digits) terms per rung; refuse digit
        // targets the affordable ladder depth cannot reach even in the
        // best (no-log) case.
        double acc = 0;
        long j_afford = 0;
        for (long j = 1; j <= j_max; ++j) {
            acc += std::pow(2.0, double(j)) * (work + 4) * 2.302585;
            if (acc > term_budget) break;
            j_afford = j;
        }
        double best_digits = 0.301 * (0.5 * j_afford * (j_afford + 1)) - 5.0;
        if (digits > best_digits)
            throw ConvergenceFailure(
                "Abel ladder cannot reach " + std::to_string(digits) +
                " digits for this series within its term budget; lower the digit target");
    }
    double direct_terms = 0; // cumulative cost backstop for the direct path
    for (long j = 1; j <= j_max; ++j) {
        if (!shape && !alternating) {
            direct_terms += std::pow(2.0, double(j)) * (work + 4) * 2.302585;
            if (direct_terms > term_budget)
                throw ConvergenceFailure(
                    "Abel ladder exhausted its term budget at " + std::to_string(digits) +
                    " digits; lower the digit target");
        }
        Real x = Real(1L, work) - Real(Rational::pow2(-j), work);
        ladder.emplace_back(abel_point_value(seq, x, alternating, work, j, shape));
        j_used = j;
        if (j >= 4) {
            auto [val, corr] = accel::richardson_geometric(ladder, 2);
            extrapolated = val;
            correction = corr;
            Real scale = Real(1L, work) + val.real(work).abs();
            if (correction.real(work).abs() < conv_tol * scale) {
                converged = true;
                break;
            }
            // Abel functions of power-decay coefficients carry h^k log h
            // corrections; the log-aware schedule picks those up.
            if (j >= 8) {
                auto [lval, lcorr] = accel::richardson_geometric(ladder, 2, true);
                if (lcorr.real(work).abs() < conv_tol * (Real(1L, work) + lval.real(work).abs())) {
                    extrapolated = lval;
                    correction = lcorr;
                    converged = true;
                    break;
                }
            }
        }
    }
    if (!converged)
        throw ConvergenceFailure("Abel ladder did not stabilize after " +
                                 std::to_string(j_used) + " rungs; last correction " +
                                 correction.real(work).str(3));

    Real value = extrapolated.real(work);
    std::vector<std::string> diag;
    {
        std::ostringstream os;
        os << "ladder x_j = 1 - 2^-j for j = 1.." << j_used;
        diag.push_back(os.str());
        std::ostringstream os2;
        os2 << "extrapolation correction " << correction.real(work).str(3);
        diag.push_back(os2.str());
    }

    // A ladder that stabilizes onto a simple rational is reported exactly.
    Real snap_eps = Real::exp10(-(digits + 2), work) +
                    correction.real(work).abs() * Real(100L, work);
    if (auto q = snap_to_rational(value, snap_eps, 1000000)) {
        diag.push_back("identified rational limit " + q->str());
        return SummationResult(Scalar(*q), Method::Euler, std::move(diag));
    }
    return SummationResult(Scalar(value), Method::Euler, std::move(diag));
}

Scalar euler_alternating_power(long p) {
    if (p < 0) throw DomainError("euler_alternating_power needs p >= 0");
    // d^p/dx^p sigma as a polynomial in sigma, via sigma' = sigma(1-sigma).
    std::vector<Rational> q{Rational(0), Rational(1)}; // Q_0(s) = s
    for (long step = 0; step < p; ++step) {
        std::vector<Rational> dq(q.size() > 1 ? q.size() - 1 : 1, Rational(0));
        for (std::size_t k = 1; k < q.size(); ++k)
            dq[k - 1] = Rational(static_cast<long>(k)) * q[k];
        // Q_{new} = dq * (s - s^2)
        std::vector<Rational> next(dq.size() + 2, Rational(0));
        for (std::size_t k = 0; k < dq.size(); ++k) {
            next[k + 1] += dq[k];
            next[k + 2] -= dq[k];
        }
        q = std::move(next);
    }
    Rational half(1, 2);
    Rational acc(0);
    Rational pw(1);
    for (std::size_t k = 0; k < q.size(); ++k) {
        acc += q[k] * pw;
        pw *= half;
    }
    return Scalar(acc);
}

Scalar borel_sum_closed(long p) {
    if (p < 0) throw DomainError("borel_sum_closed needs p >= 0");
    if (p == 0) {
        // 1 - 1 + 1 - ... : g = e^{-t}, integral of e^{-2t} is 1/2.
        ExpPolynomial g({Scalar(1)}, 1);
        return g.times_exp().integrate();
    }
    ExpPolynomial g({Scalar(0), Scalar(1)}, 1); // t e^{-t}
    for (long i = 1; i < p; ++i) g = g.apply_theta();
    return g.times_exp().integrate();
}

SummationResult borel_sum_numeric(const CoefficientSequence& seq, const Scalar& point,
                                  int digits) {
    long avail = seq.has_generator() ? 41 : seq.stored_size();
    if (avail < 4)
        throw InsufficientTerms("borel_sum_numeric needs at least 4 series terms");

    // Borel transform coefficients g_n = a_n point^n / n!.
    std::vector<Scalar> g;
    g.reserve(static_cast<std::size_t>(avail));
    Scalar pw(1);
    for (long n = 0; n < avail; ++n) {
        g.push_back(seq.signed_term(n) * pw /
                    Scalar(Rational::factorial(static_cast<unsigned long>(n))));
        pw = pw * point;
    }
    CoefficientSequence gseq(g, SignConvention::AsIs, "borel-transform");

    const int work = digits + 10;
    const double t_max = (digits + 14) * 2.302585;
    auto pole_on_path = [&](const pade::PadeRational& p) {
        const int grid = 800;
        Real prev = p.den.empty() ? Real(1L, work) : Real(0L, work);
        bool first = true;
        int prev_sign = 0;
        for (int i = 0; i <= grid; ++i) {
            Real t(t_max * i / grid, work);
            Scalar d(0);
            for (auto it = p.den.rbegin(); it != p.den.rend(); ++it) d = d * Scalar(t) + *it;
            int s = d.sign();
            if (!first && s * prev_sign < 0) return true;
            if (s == 0) return true;
            prev_sign = s;
            first = false;
        }
        (void)prev;
        return false;
    };

    std::vector<std::string> diag;
    std::optional<Real> prev_val;
    Real tol = Real::exp10(-digits, work);
    long skipped = 0;
    for (long m = 1; 2 * m + 1 <= avail && m <= 18; ++m) {
        pade::PadeRational pm;
        try {
            pm = pade::pade_approximant(gseq, m, m);
        } catch (const SingularSystem&) {
            ++skipped;
            continue;
        }
        if (pole_on_path(pm))
            throw PoleOnPath("Borel continuation [" + std::to_string(m) + "/" +
                             std::to_string(m) + "] has a pole on [0, inf)");

        // Does this approximant reproduce every available coefficient?
        bool exact_continuation = true;
        {
            std::vector<Scalar> expansion(static_cast<std::size_t>(avail), Scalar(0));
            for (long i = 0; i < avail && exact_continuation; ++i) {
                Scalar acc = i <= m ? pm.num[static_cast<std::size_t>(i)] : Scalar(0);
                for (long jj = 1; jj <= std::min(i, m); ++jj)
                    acc -= pm.den[static_cast<std::size_t>(jj)] *
                           expansion[static_cast<std::size_t>(i - jj)];
                expansion[static_cast<std::size_t>(i)] = acc;
                Scalar diff = expansion[static_cast<std::size_t>(i)] - g[static_cast<std::size_t>(i)];
                if (!diff.is_zero()) {
                    if (diff.is_exact())
                        exact_continuation = false;
                    else if (diff.real(work).abs() > tol)
                        exact_continuation = false;
                }
            }
        }

        std::vector<Real> num_r, den_r;
        for (const Scalar& s : pm.num) num_r.push_back(s.real(work));
        for (const Scalar& s : pm.den) den_r.push_back(s.real(work));
        auto integrand = [&](const Real& t) {
            Real n(0L, work), d(0L, work);
            for (auto it = num_r.rbegin(); it != num_r.rend(); ++it) n = n * t + *it;
            for (auto it = den_r.rbegin(); it != den_r.rend(); ++it) d = d * t + *it;
            return n / d * (-t).exp();
        };
        Real val = quadrature_semi_infinite(integrand, digits).real(work);

        if (exact_continuation) {
            diag.push_back("Pade [" + std::to_string(m) + "/" + std::to_string(m) +
                           "] reproduces all " + std::to_string(avail) +
                           " transform coefficients");
            diag.push_back("quadrature target 1e-" + std::to_string(digits));
            return SummationResult(Scalar(val), Method::Borel, std::move(diag));
        }
        if (prev_val) {
            Real spread = (val - *prev_val).abs();
            if (spread < tol * (Real(1L, work) + val.abs())) {
                diag.push_back("Pade order sweep stabilized at [" + std::to_string(m) + "/" +
                               std::to_string(m) + "], spread " + spread.str(3));
                return SummationResult(Scalar(val), Method::Borel, std::move(diag));
            }
        }
        prev_val = val;
    }
    throw ConvergenceFailure("Borel Pade order sweep did not stabilize (" +
                             std::to_string(skipped) + " singular orders skipped)");
}

Scalar generic_sum_periodic(const std::vector<Scalar>& pattern) {
    if (pattern.empty()) throw DomainError("empty pattern");
    Scalar block(0);
    for (const Scalar& v : pattern) block += v;
    if (!block.is_zero())
        throw InconsistentSummation("pattern block sums to " + block.str() +
                                    "; no finite value is axiom-consistent");
    long p = static_cast<long>(pattern.size());
    Scalar acc(0);
    Scalar prefix(0);
    for (long k = 0; k < p; ++k) {
        acc += prefix; // prefix_k = sum of pattern[0..k-1]
        prefix += pattern[static_cast<std::size_t>(k)];
    }
    return acc / Scalar(p);
}

Scalar generic_sum_periodic(const std::vector<Scalar>& prefix,
                            const std::vector<Scalar>& pattern) {
    // Finite additivity: S(prefix :: stream) = sum(prefix) + S(stream).
    Scalar s = generic_sum_periodic(pattern);
    Scalar head(0);
    for (const Scalar& v : prefix) head += v;
    return head + s;
}

Scalar geometric_sum(const Scalar& first, const Scalar& ratio) {
    if ((Scalar(1) - ratio).is_zero())
        throw InconsistentSummation("geometric series with ratio 1 has no finite value");
    return first / (Scalar(1) - ratio);
}

Scalar zeta_negative(long k) {
    if (k < 0) throw DomainError("zeta_negative needs k >= 0");
    std::vector<Scalar> b = bernoulli_numbers(k + 1);
    Scalar bk = b[static_cast<std::size_t>(k + 1)];
    if (k == 0) bk = Scalar(Rational(1, 2)); // B_1^+ convention
    return -bk / Scalar(k + 1);
}

std::vector<long> riemann_rearrange(const Scalar& target, long N) {
    if (N < 1) throw DomainError("riemann_rearrange needs N >= 1");
    double t = target.to_double();
    std::vector<long> out;
    out.reserve(static_cast<std::size_t>(N));
    double sum = 0;
    long next_odd = 1, next_even = 2;
    for (long i = 0; i < N; ++i) {
        if (sum <= t) {
            out.push_back(next_odd);
            sum += 1.0 / static_cast<double>(next_odd);
            next_odd += 2;
        } else {
            out.push_back(-next_even);
            sum -= 1.0 / static_cast<double>(next_even);
            next_even += 2;
        }
    }
    return out;
}

double rearrangement_partial_sum(const std::vector<long>& indices) {
    double sum = 0;
    for (long idx : indices) {
        if (idx > 0)
            sum += 1.0 / static_cast<double>(idx);
        else
            sum -= 1.0 / static_cast<double>(-idx);
    }
    return sum;
}

} // namespace resum
} // namespace sumkit
