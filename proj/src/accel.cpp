#include "sumkit/accel.hpp"

#include <utility>

#include "sumkit/errors.hpp"

namespace sumkit {
namespace accel {

namespace {

// 0/0 detection: exact zero on the rational path, |den| below the noise
// floor of the operands on the real path.
bool negligible_denominator(const Scalar& den, const Scalar& scale) {
    if (den.is_exact()) return den.rational().is_zero();
    Real d = den.real();
    int digits = d.digits();
    Real floor = Real::exp10(-(digits - 6), digits) * (Real(1L, digits) + scale.real(digits).abs());
    return d.abs() < floor;
}

} // namespace

Scalar AccelTable::best() const {
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        for (auto vit = it->values.rbegin(); vit != it->values.rend(); ++vit)
            if (vit->has_value()) return **vit;
    throw DegenerateDenominator("acceleration table has no defined entries");
}

AccelTable shanks(const PartialSums& sums, int iterations) {
    if (iterations < 1) throw DomainError("shanks needs iterations >= 1");
    if (sums.size() < 2 * iterations + 1)
        throw InsufficientTerms("shanks with " + std::to_string(iterations) + " iterations needs " +
                                std::to_string(2 * iterations + 1) + " partial sums, got " +
                                std::to_string(sums.size()));

    AccelTable table;
    table.source = sums;
    AccelTable::Row row0{"A", {}};
    for (const Scalar& v : sums.values()) row0.values.emplace_back(v);
    table.rows.push_back(std::move(row0));

    for (int j = 1; j <= iterations; ++j) {
        const auto& prev = table.rows.back().values;
        AccelTable::Row row{"S^" + std::to_string(j), {}};
        bool any_defined = false;
        for (std::size_t i = 0; i + 2 < prev.size(); ++i) {
            if (!prev[i] || !prev[i + 1] || !prev[i + 2]) {
                row.values.emplace_back(std::nullopt);
                continue;
            }
            const Scalar& a = *prev[i];
            const Scalar& b = *prev[i + 1];
            const Scalar& c = *prev[i + 2];
            Scalar den = c - b - b + a;
            if (negligible_denominator(den, c)) {
                row.values.emplace_back(std::nullopt);
                continue;
            }
            row.values.emplace_back((c * a - b * b) / den);
            any_defined = true;
        }
        if (!any_defined)
            throw DegenerateDenominator("shanks row " + std::to_string(j) + " is entirely absent");
        table.rows.push_back(std::move(row));
    }
    return table;
}

Scalar richardson(const PartialSums& sums, int order, long n_start) {
    if (order < 1) throw DomainError("richardson needs order >= 1");
    if (n_start < 1) throw DomainError("richardson needs n_start >= 1");
    // Window A_N..A_{N+k} with A_j stored at values[j-1].
    if (sums.size() < n_start + order)
        throw InsufficientTerms("richardson order " + std::to_string(order) + " at N = " +
                                std::to_string(n_start) + " needs " +
                                std::to_string(n_start + order) + " partial sums, got " +
                                std::to_string(sums.size()));
    const long k = order;
    Scalar acc(0);
    for (long l = 0; l <= k; ++l) {
        Rational w = Rational(n_start + l).pow_int(k) *
                     Rational::binomial(static_cast<unsigned long>(k),
                                        static_cast<unsigned long>(l));
        if ((k - l) % 2 != 0) w = -w;
        acc += Scalar(w) * sums[static_cast<std::size_t>(n_start - 1 + l)];
    }
    return acc / Scalar(Rational::factorial(static_cast<unsigned long>(k)));
}

AccelTable richardson_table(const PartialSums& sums, int order) {
    if (order < 1) throw DomainError("richardson needs order >= 1");
    if (sums.size() < order + 1)
        throw InsufficientTerms("richardson table of order " + std::to_string(order) + " needs " +
                                std::to_string(order + 1) + " partial sums");
    AccelTable table;
    table.source = sums;
    AccelTable::Row row0{"A", {}};
    for (const Scalar& v : sums.values()) row0.values.emplace_back(v);
    table.rows.push_back(std::move(row0));
    for (int k = 1; k <= order; ++k) {
        AccelTable::Row row{"R^" + std::to_string(k), {}};
        for (long n = 1; n + k <= sums.size(); ++n)
            row.values.emplace_back(richardson(sums, k, n));
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::pair<Scalar, Scalar> richardson_geometric(const std::vector<Scalar>& values, long q,
                                               bool log_aware) {
    if (values.size() < 2) throw InsufficientTerms("geometric ladder needs >= 2 values");
    if (q < 2) throw DomainError("ladder ratio must be >= 2");
    // Neville elimination of q^-j, q^-2j, ... : T_k <- (q^k T_k - T_{k-1})/(q^k - 1).
    std::vector<Scalar> t(values);
    Scalar correction(0);
    for (std::size_t pass = 1; pass < values.size(); ++pass) {
        long power = log_aware ? static_cast<long>((pass + 1) / 2) : static_cast<long>(pass);
        Scalar qk = Scalar(Rational(q).pow_int(power));
        for (std::size_t j = values.size() - 1; j >= pass; --j)
            t[j] = (qk * t[j] - t[j - 1]) / (qk - Scalar(1));
        correction = t[values.size() - 1] - t[values.size() - 2];
    }
    return {t.back(), correction};
}

} // namespace accel
} // namespace sumkit
