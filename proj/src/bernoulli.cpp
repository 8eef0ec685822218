#include "sumkit/bernoulli.hpp"

#include "sumkit/errors.hpp"

namespace sumkit {

std::vector<Scalar> bernoulli_numbers(long K) {
    if (K < 0) throw DomainError("bernoulli_numbers needs K >= 0");
    std::vector<Rational> b;
    b.reserve(static_cast<std::size_t>(K) + 1);
    b.push_back(Rational(1));
    for (long k = 1; k <= K; ++k) {
        // sum_{j=0}^{k} binom(k+1, j) B_j = 0 solved for B_k
        Rational acc(0);
        for (long j = 0; j < k; ++j)
            acc += Rational::binomial(static_cast<unsigned long>(k + 1),
                                      static_cast<unsigned long>(j)) *
                   b[static_cast<std::size_t>(j)];
        b.push_back(-acc / Rational(k + 1));
    }
    std::vector<Scalar> out;
    out.reserve(b.size());
    for (Rational& r : b) out.emplace_back(std::move(r));
    return out;
}

} // namespace sumkit
