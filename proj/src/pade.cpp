#include "sumkit/pade.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "sumkit/errors.hpp"

namespace sumkit {
namespace pade {

namespace {

bool scalar_negligible(const Scalar& v) {
    if (v.is_exact()) return v.rational().is_zero();
    Real r = v.real();
    int d = r.digits();
    return r.abs() < Real::exp10(-(d - 8), d);
}

std::vector<Scalar> poly_mul(const std::vector<Scalar>& p, const std::vector<Scalar>& q) {
    std::vector<Scalar> r(p.size() + q.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return r;
}

// Moment functional L[x^{2k}] = a_k; odd powers vanish by symmetry.
Scalar moment_functional(const std::vector<Scalar>& poly, const std::vector<Scalar>& a) {
    Scalar acc(0);
    for (std::size_t k = 0; k < poly.size(); k += 2) {
        std::size_t half = k / 2;
        if (half >= a.size()) throw InsufficientTerms("moment functional ran out of moments");
        acc += poly[k] * a[half];
    }
    return acc;
}

} // namespace

MomentSequence::MomentSequence(std::vector<Scalar> a, bool stieltjes_candidate)
    : scale_(Scalar(1)) {
    if (a.size() < 1) throw DomainError("empty moment sequence");
    if (a[0].is_zero()) throw DomainError("moment sequence needs a_0 != 0");
    scale_ = a[0];
    a_.reserve(a.size());
    for (const Scalar& v : a) a_.push_back(v / scale_);
    if (stieltjes_candidate)
        for (std::size_t n = 0; n < a_.size(); ++n)
            if (a_[n].sign() <= 0)
                throw DomainError("Stieltjes candidate needs positive moments, a_" +
                                  std::to_string(n) + " is not");
}

MomentSequence MomentSequence::from_series(const CoefficientSequence& seq, long count,
                                           bool stieltjes_candidate) {
    if (!seq.extendable_to(count - 1))
        throw InsufficientTerms("series cannot supply " + std::to_string(count) +
                                " coefficients");
    std::vector<Scalar> a;
    a.reserve(static_cast<std::size_t>(count));
    for (long n = 0; n < count; ++n) {
        Scalar t = seq.signed_term(n);
        a.push_back((n % 2) == 0 ? t : -t);
    }
    return MomentSequence(std::move(a), stieltjes_candidate);
}

std::pair<ContFracCoeffs, OrthogonalPolySet> moments_to_contfrac_full(const MomentSequence& m) {
    const std::vector<Scalar>& a = m.a();
    if (a.size() < 2) throw InsufficientTerms("need at least two moments");

    OrthogonalPolySet set;
    set.polys.push_back({Scalar(1)});            // P_0
    set.polys.push_back({Scalar(0), Scalar(1)}); // P_1

    ContFracCoeffs cf;
    Scalar prev_norm(1); // L[P_0^2] = a_0 = 1 after normalization
    long max_n = static_cast<long>(a.size()) - 1;
    for (long n = 1; n <= max_n; ++n) {
        const std::vector<Scalar>& pn = set.polys[static_cast<std::size_t>(n)];
        Scalar norm = moment_functional(poly_mul(pn, pn), a);
        Scalar bn = norm / prev_norm;
        cf.b.push_back(bn);
        if (scalar_negligible(norm)) {
            cf.terminated = true;
            break;
        }
        prev_norm = norm;
        if (n == max_n) break;
        // P_{n+1} = x P_n - b_n P_{n-1}
        const std::vector<Scalar>& pm = set.polys[static_cast<std::size_t>(n - 1)];
        std::vector<Scalar> next(pn.size() + 1, Scalar(0));
        for (std::size_t k = 0; k < pn.size(); ++k) next[k + 1] = pn[k];
        for (std::size_t k = 0; k < pm.size(); ++k) next[k] -= bn * pm[k];
        set.polys.push_back(std::move(next));
    }
    return {std::move(cf), std::move(set)};
}

ContFracCoeffs moments_to_contfrac(const MomentSequence& a) {
    return moments_to_contfrac_full(a).first;
}

MomentSequence contfrac_to_moments(const ContFracCoeffs& cf, long K) {
    if (K < 1) throw DomainError("contfrac_to_moments needs K >= 1");
    auto b_at = [&](long h) -> Scalar {
        // Heights past the stored fraction carry weight zero; that is what
        // a terminated b-list means.
        if (h < 1 || h > static_cast<long>(cf.b.size())) return Scalar(0);
        return cf.b[static_cast<std::size_t>(h - 1)];
    };
    // v[h] = weighted count of lattice paths ending at height h; a
    // down-step from height h carries weight b_h.
    std::vector<Scalar> v(static_cast<std::size_t>(K) + 2, Scalar(0));
    v[0] = Scalar(1);
    std::vector<Scalar> a;
    a.reserve(static_cast<std::size_t>(K) + 1);
    a.push_back(Scalar(1));
    for (long n = 1; n <= K; ++n) {
        for (int step = 0; step < 2; ++step) {
            std::vector<Scalar> w(v.size(), Scalar(0));
            for (long h = 0; h < static_cast<long>(v.size()); ++h) {
                const Scalar& x = v[static_cast<std::size_t>(h)];
                if (x.is_zero()) continue;
                if (h + 1 < static_cast<long>(v.size()))
                    w[static_cast<std::size_t>(h + 1)] += x;
                if (h >= 1) w[static_cast<std::size_t>(h - 1)] += x * b_at(h);
            }
            v = std::move(w);
        }
        a.push_back(v[0]);
    }
    return MomentSequence(std::move(a));
}

Scalar PadeRational::eval(const Scalar& z) const {
    auto horner = [&](const std::vector<Scalar>& c) {
        Scalar acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
        return acc;
    };
    return horner(num) / horner(den);
}

ComplexReal PadeRational::eval(const ComplexReal& z) const {
    int digits = z.re.digits();
    auto horner = [&](const std::vector<Scalar>& c) {
        ComplexReal acc(Real(0L, digits), Real(0L, digits));
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            acc = acc * z + ComplexReal(it->real(digits));
        return acc;
    };
    return horner(num) / horner(den);
}

PadeRational pade_approximant(const CoefficientSequence& seq, long n, long m) {
    if (n < 0 || m < 0) throw DomainError("pade orders must be nonnegative");
    if (!seq.extendable_to(n + m))
        throw InsufficientTerms("pade [" + std::to_string(n) + "/" + std::to_string(m) +
                                "] needs " + std::to_string(n + m + 1) + " coefficients");
    std::vector<Scalar> c = seq.signed_prefix(n + m + 1);
    auto c_at = [&](long i) { return i < 0 ? Scalar(0) : c[static_cast<std::size_t>(i)]; };

    std::vector<Scalar> den(static_cast<std::size_t>(m) + 1, Scalar(0));
    den[0] = Scalar(1);
    if (m > 0) {
        // Solve sum_{j=1..m} d_j c_{n+k-j} = -c_{n+k} for k = 1..m.
        std::vector<std::vector<Scalar>> mat(static_cast<std::size_t>(m));
        std::vector<Scalar> rhs(static_cast<std::size_t>(m), Scalar(0));
        for (long k = 1; k <= m; ++k) {
            auto& row = mat[static_cast<std::size_t>(k - 1)];
            row.resize(static_cast<std::size_t>(m));
            for (long j = 1; j <= m; ++j)
                row[static_cast<std::size_t>(j - 1)] = c_at(n + k - j);
            rhs[static_cast<std::size_t>(k - 1)] = -c_at(n + k);
        }
        long dim = m;
        for (long col = 0; col < dim; ++col) {
            long pivot = -1;
            for (long r = col; r < dim; ++r) {
                const Scalar& v = mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
                if (scalar_negligible(v)) continue;
                if (pivot < 0)
                    pivot = r;
                else if (!v.is_exact() &&
                         v.abs() > mat[static_cast<std::size_t>(pivot)]
                                      [static_cast<std::size_t>(col)].abs())
                    pivot = r;
            }
            if (pivot < 0)
                throw SingularSystem("pade [" + std::to_string(n) + "/" + std::to_string(m) +
                                     "] Hankel block is singular");
            std::swap(mat[static_cast<std::size_t>(col)], mat[static_cast<std::size_t>(pivot)]);
            std::swap(rhs[static_cast<std::size_t>(col)], rhs[static_cast<std::size_t>(pivot)]);
            const Scalar piv = mat[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
            for (long r = col + 1; r < dim; ++r) {
                Scalar f = mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / piv;
                if (f.is_zero()) continue;
                for (long cc = col; cc < dim; ++cc)
                    mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -=
                        f * mat[static_cast<std::size_t>(col)][static_cast<std::size_t>(cc)];
                rhs[static_cast<std::size_t>(r)] -= f * rhs[static_cast<std::size_t>(col)];
            }
        }
        for (long r = dim - 1; r >= 0; --r) {
            Scalar acc = rhs[static_cast<std::size_t>(r)];
            for (long cc = r + 1; cc < dim; ++cc)
                acc -= mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] *
                       den[static_cast<std::size_t>(cc + 1)];
            den[static_cast<std::size_t>(r + 1)] =
                acc / mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
        }
    }

    std::vector<Scalar> num(static_cast<std::size_t>(n) + 1, Scalar(0));
    for (long i = 0; i <= n; ++i) {
        Scalar acc(0);
        for (long j = 0; j <= std::min(i, m); ++j)
            acc += den[static_cast<std::size_t>(j)] * c_at(i - j);
        num[static_cast<std::size_t>(i)] = acc;
    }

    // Matching postcondition: num/den expands to the input through n+m.
    std::vector<Scalar> expansion(static_cast<std::size_t>(n + m) + 1, Scalar(0));
    for (long i = 0; i <= n + m; ++i) {
        Scalar acc = i <= n ? num[static_cast<std::size_t>(i)] : Scalar(0);
        for (long j = 1; j <= std::min(i, m); ++j)
            acc -= den[static_cast<std::size_t>(j)] * expansion[static_cast<std::size_t>(i - j)];
        expansion[static_cast<std::size_t>(i)] = acc;
        Scalar diff = expansion[static_cast<std::size_t>(i)] - c_at(i);
        if (!scalar_negligible(diff))
            throw SingularSystem("pade matching postcondition failed at order " +
                                 std::to_string(i));
    }

    PadeRational p;
    p.num = std::move(num);
    p.den = std::move(den);
    p.order_n = n;
    p.order_m = m;
    return p;
}

std::vector<std::pair<std::string, Scalar>> staircase_from_contfrac(const ContFracCoeffs& cf,
                                                                    const Scalar& a0,
                                                                    const Scalar& z, long depth) {
    long want = 2 * depth;
    std::vector<std::pair<std::string, Scalar>> out;
    auto label = [](long j) {
        return "P^" + std::to_string(j / 2) + "_" + std::to_string((j + 1) / 2);
    };
    // Wallis three-term recurrence for G = 1 + b1 z/(1 + b2 z/(1 + ...));
    // the staircase value is a0 / G_j.
    Scalar h_prev(1), h_cur(1);
    Scalar k_prev(0), k_cur(1);
    out.emplace_back(label(0), a0);
    for (long j = 1; j <= want; ++j) {
        Scalar bj =
            j <= static_cast<long>(cf.b.size()) ? cf.b[static_cast<std::size_t>(j - 1)] : Scalar(0);
        Scalar h_next = h_cur + bj * z * h_prev;
        Scalar k_next = k_cur + bj * z * k_prev;
        h_prev = h_cur;
        h_cur = h_next;
        k_prev = k_cur;
        k_cur = k_next;
        if (scalar_negligible(h_cur)) throw DomainError("staircase convergent pole at z");
        out.emplace_back(label(j), a0 * k_cur / h_cur);
    }
    return out;
}

std::vector<std::pair<std::string, Scalar>> staircase_evaluate(const CoefficientSequence& seq,
                                                               const Scalar& z, long depth) {
    if (depth < 1) throw DomainError("staircase depth must be >= 1");
    MomentSequence m = MomentSequence::from_series(seq, 2 * depth + 1);
    ContFracCoeffs cf = moments_to_contfrac(m);
    return staircase_from_contfrac(cf, m.scale(), z, depth);
}

namespace {

Scalar hankel_det(const std::vector<Scalar>& a, long dim, long shift) {
    std::vector<std::vector<Scalar>> mat(static_cast<std::size_t>(dim));
    for (long i = 0; i < dim; ++i) {
        mat[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(dim));
        for (long j = 0; j < dim; ++j)
            mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                a[static_cast<std::size_t>(i + j + shift)];
    }
    Scalar det(1);
    for (long col = 0; col < dim; ++col) {
        long pivot = -1;
        for (long r = col; r < dim; ++r)
            if (!mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Scalar(0);
        if (pivot != col) {
            std::swap(mat[static_cast<std::size_t>(col)], mat[static_cast<std::size_t>(pivot)]);
            det = -det;
        }
        const Scalar piv = mat[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        det *= piv;
        for (long r = col + 1; r < dim; ++r) {
            Scalar f = mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / piv;
            if (f.is_zero()) continue;
            for (long cc = col; cc < dim; ++cc)
                mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -=
                    f * mat[static_cast<std::size_t>(col)][static_cast<std::size_t>(cc)];
        }
    }
    return det;
}

} // namespace

HankelReport stieltjes_hankel_check(const MomentSequence& m) {
    const std::vector<Scalar>& a = m.a();
    if (a.size() < 2) throw InsufficientTerms("hankel check needs >= 2 moments");
    HankelReport rep;
    long len = static_cast<long>(a.size());
    for (long dim = 1; 2 * (dim - 1) <= len - 1; ++dim)
        rep.dets_plain.push_back(hankel_det(a, dim, 0));
    for (long dim = 1; 2 * (dim - 1) + 1 <= len - 1; ++dim)
        rep.dets_shifted.push_back(hankel_det(a, dim, 1));
    rep.all_positive = true;
    auto scan = [&](const std::vector<Scalar>& dets) {
        for (std::size_t i = 0; i < dets.size(); ++i) {
            int s = dets[i].sign();
            if (s <= 0) rep.all_positive = false;
            if (s == 0) rep.boundary_degenerate = true;
            if (s < 0 && rep.first_failure_order < 0)
                rep.first_failure_order = static_cast<long>(i) + 1;
        }
    };
    scan(rep.dets_plain);
    scan(rep.dets_shifted);
    return rep;
}

CarlemanReport carleman_check(const MomentSequence& m) {
    const std::vector<Scalar>& a = m.a();
    if (a.size() < 4) throw InsufficientTerms("carleman check needs >= 4 moments");
    CarlemanReport rep;
    const int digits = 30;
    std::vector<double> r;
    for (std::size_t n = 1; n < a.size(); ++n) {
        Scalar scaled =
            a[n].abs() / Scalar(Rational::factorial(static_cast<unsigned long>(2 * n)));
        r.push_back(scaled.real(digits).log().to_double());
    }
    auto slope = [&](std::size_t lo, std::size_t hi) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0, cnt = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            double x = static_cast<double>(i + 1);
            sx += x;
            sy += r[i];
            sxx += x * x;
            sxy += x * r[i];
            cnt += 1;
        }
        return (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    };
    std::size_t half = r.size() / 2;
    double beta_lo = slope(0, std::max<std::size_t>(half, 2));
    double beta_hi = slope(half, r.size());
    rep.slope_drift = beta_hi - beta_lo;
    rep.c_estimate = std::exp(beta_hi);
    rep.satisfied = rep.slope_drift < 0.5;
    std::ostringstream os;
    os << (rep.satisfied ? "satisfied" : "violated") << " (c ~ " << rep.c_estimate
       << ", slope drift " << rep.slope_drift << ")";
    rep.summary = os.str();
    return rep;
}

HerglotzReport herglotz_probe(const PadeRational& p, long samples, int digits) {
    HerglotzReport rep;
    const double radii[] = {0.25, 0.5, 1.0, 2.0, 4.0};
    Real tol = Real::exp10(-(digits - 6), digits);
    for (int ring = 0; ring < 5 && rep.points_checked < samples; ++ring) {
        for (int k = 1; k <= 11 && rep.points_checked < samples; ++k) {
            for (int sign : {+1, -1}) {
                if (rep.points_checked >= samples) break;
                double theta = sign * M_PI * k / 12.0;
                double re = radii[ring] * std::cos(theta);
                double im = radii[ring] * std::sin(theta);
                ComplexReal z(Real(re, digits), Real(im, digits));
                ComplexReal denv = [&] {
                    ComplexReal acc(Real(0L, digits), Real(0L, digits));
                    for (auto it = p.den.rbegin(); it != p.den.rend(); ++it)
                        acc = acc * z + ComplexReal(it->real(digits));
                    return acc;
                }();
                if (denv.abs() < tol) continue;
                ComplexReal w = p.eval(z);
                Real prod = (-w.im) * z.im; // Im(-p(z)) * Im(z)
                ++rep.points_checked;
                if (prod < -tol) {
                    ++rep.violations;
                    if (rep.violation_points.size() < 16)
                        rep.violation_points.emplace_back(re, im);
                }
            }
        }
    }
    rep.herglotz_compatible = rep.violations == 0;
    return rep;
}

namespace {

// exp of a power series with zero constant term, truncated at `order`.
std::vector<Scalar> exp_series(const std::vector<Scalar>& s, long order) {
    std::vector<Scalar> e(static_cast<std::size_t>(order) + 1, Scalar(0));
    e[0] = Scalar(1);
    for (long n = 1; n <= order; ++n) {
        Scalar acc(0);
        for (long k = 1; k <= n; ++k) {
            if (k >= static_cast<long>(s.size())) break;
            acc += Scalar(k) * s[static_cast<std::size_t>(k)] * e[static_cast<std::size_t>(n - k)];
        }
        e[static_cast<std::size_t>(n)] = acc / Scalar(n);
    }
    return e;
}

} // namespace

std::vector<Scalar> continued_exponential(const std::vector<Scalar>& a, long K) {
    if (K < 0) throw DomainError("continued_exponential needs K >= 0");
    if (a.empty() || a[0].is_zero()) throw DomainError("continued exponential needs a_0 != 0");
    auto a_at = [&](long j) {
        return j < static_cast<long>(a.size()) ? a[static_cast<std::size_t>(j)] : Scalar(0);
    };
    // V_j = exp(a_j z V_{j+1}) built innermost-first; the tower is a_0 V_1.
    std::vector<Scalar> v{Scalar(1)};
    for (long j = K; j >= 1; --j) {
        std::vector<Scalar> s(static_cast<std::size_t>(K) + 1, Scalar(0));
        for (long i = 0; i + 1 <= K && i < static_cast<long>(v.size()); ++i)
            s[static_cast<std::size_t>(i + 1)] = a_at(j) * v[static_cast<std::size_t>(i)];
        v = exp_series(s, K);
    }
    std::vector<Scalar> c;
    c.reserve(static_cast<std::size_t>(K) + 1);
    for (long i = 0; i <= K; ++i)
        c.push_back(a[0] *
                    (i < static_cast<long>(v.size()) ? v[static_cast<std::size_t>(i)] : Scalar(0)));
    return c;
}

std::vector<Scalar> continued_exponential_match(const std::vector<Scalar>& c, long K) {
    if (K < 0) throw DomainError("continued_exponential_match needs K >= 0");
    if (c.empty() || c[0].is_zero()) throw DomainError("inverse match needs c_0 != 0");
    auto c_at = [&](long j) {
        return j < static_cast<long>(c.size()) ? c[static_cast<std::size_t>(j)] : Scalar(0);
    };
    std::vector<Scalar> a{c[0]};
    Scalar chain = c[0]; // a_0 a_1 ... a_{j-1}
    for (long j = 1; j <= K; ++j) {
        std::vector<Scalar> trial = a;
        trial.push_back(Scalar(0));
        std::vector<Scalar> forward = continued_exponential(trial, j);
        Scalar residual = c_at(j) - forward[static_cast<std::size_t>(j)];
        if (chain.is_zero()) {
            if (!scalar_negligible(residual))
                throw DomainError("coefficients are not a continued exponential");
            a.push_back(Scalar(0));
        } else {
            a.push_back(residual / chain);
        }
        chain *= a.back();
    }
    return a;
}

} // namespace pade
} // namespace sumkit
