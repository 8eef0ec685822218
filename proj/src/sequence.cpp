#include "sumkit/sequence.hpp"

#include <memory>
#include <utility>

#include "sumkit/errors.hpp"

namespace sumkit {

CoefficientSequence::CoefficientSequence(std::vector<Scalar> terms, SignConvention sign,
                                         std::string origin)
    : terms_(std::move(terms)), sign_(sign), origin_(std::move(origin)) {
    if (sign_ == SignConvention::AlternatingImplied)
        for (const Scalar& t : terms_)
            if (t.sign() < 0)
                throw DomainError("alternating-implied sequence stores nonnegative terms");
}

CoefficientSequence::CoefficientSequence(Generator gen, SignConvention sign, std::string origin)
    : gen_(std::move(gen)), sign_(sign), origin_(std::move(origin)) {}

Scalar CoefficientSequence::term(long n) const {
    if (n < 0) throw DomainError("negative term index");
    if (n < stored_size()) return terms_[static_cast<std::size_t>(n)];
    if (gen_) return gen_(n);
    throw GeneratorExhausted("sequence '" + origin_ + "' has only " +
                             std::to_string(stored_size()) + " terms, index " +
                             std::to_string(n) + " requested");
}

Scalar CoefficientSequence::signed_term(long n) const {
    Scalar t = term(n);
    if (sign_ == SignConvention::AlternatingImplied && (n % 2) != 0) return -t;
    return t;
}

bool CoefficientSequence::extendable_to(long n) const {
    return gen_ || n < stored_size();
}

std::vector<Scalar> CoefficientSequence::prefix(long count) const {
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long n = 0; n < count; ++n) out.push_back(term(n));
    return out;
}

std::vector<Scalar> CoefficientSequence::signed_prefix(long count) const {
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long n = 0; n < count; ++n) out.push_back(signed_term(n));
    return out;
}

PartialSums partial_sums(const CoefficientSequence& seq, const Scalar& point, long N) {
    if (N < 0) throw DomainError("partial_sums needs N >= 0");
    if (!seq.extendable_to(N))
        throw GeneratorExhausted("sequence cannot supply " + std::to_string(N + 1) + " terms");
    std::vector<Scalar> sums;
    sums.reserve(static_cast<std::size_t>(N) + 1);
    Scalar acc(0);
    Scalar p(1);
    for (long n = 0; n <= N; ++n) {
        acc += seq.signed_term(n) * p;
        sums.push_back(acc);
        p *= point;
    }
    return PartialSums(std::move(sums));
}

CoefficientSequence alternating_power_series(long p) {
    return CoefficientSequence(
        [p](long n) { return Scalar(Rational(n + 1).pow_int(p)); },
        SignConvention::AlternatingImplied, "alt-power-" + std::to_string(p));
}

CoefficientSequence periodic_series(std::vector<Scalar> pattern) {
    if (pattern.empty()) throw DomainError("empty pattern");
    auto pat = std::make_shared<std::vector<Scalar>>(std::move(pattern));
    return CoefficientSequence(
        [pat](long n) { return (*pat)[static_cast<std::size_t>(n) % pat->size()]; },
        SignConvention::AsIs, "periodic");
}

namespace {

Scalar rat(long n, long d) { return Scalar(Rational(n, d)); }

CoefficientSequence make_catalog(const std::string& name) {
    if (name == "log2")
        // sum (-1)^n/(n+1) x^n; at x = 1 this is 1 - 1/2 + 1/3 - ... = log 2
        return CoefficientSequence([](long n) { return rat(1, n + 1); },
                                   SignConvention::AlternatingImplied, name);
    if (name == "basel")
        // sum 1/(n+1)^2 x^n; at x = 1 this is pi^2/6
        return CoefficientSequence([](long n) { return rat(1, (n + 1) * (n + 1)); },
                                   SignConvention::AsIs, name);
    if (name == "geometric")
        return CoefficientSequence([](long) { return Scalar(1); }, SignConvention::AsIs, name);
    if (name == "ones")
        return CoefficientSequence([](long) { return Scalar(1); }, SignConvention::AsIs, name);
    if (name == "alternating-ones")
        return CoefficientSequence([](long) { return Scalar(1); },
                                   SignConvention::AlternatingImplied, name);
    if (name == "alternating-integers")
        return CoefficientSequence([](long n) { return Scalar(n + 1); },
                                   SignConvention::AlternatingImplied, name);
    if (name == "euler-factorial")
        return CoefficientSequence(
            [](long n) { return Scalar(Rational::factorial(static_cast<unsigned long>(n))); },
            SignConvention::AlternatingImplied, name);
    if (name == "exp")
        return CoefficientSequence(
            [](long n) {
                return Scalar(Rational(1) / Rational::factorial(static_cast<unsigned long>(n)));
            },
            SignConvention::AsIs, name);
    if (name == "zeros")
        return CoefficientSequence([](long) { return Scalar(0); }, SignConvention::AsIs, name);
    throw ParseError("unknown catalog series: " + name);
}

} // namespace

CoefficientSequence catalog_series(const std::string& name) { return make_catalog(name); }

std::vector<std::pair<std::string, std::string>> catalog_listing() {
    return {
        {"log2", "1 - 1/2 + 1/3 - ... (alternating harmonic, sums to log 2)"},
        {"basel", "1 + 1/4 + 1/9 + ... (sums to pi^2/6)"},
        {"geometric", "1 + x + x^2 + ..."},
        {"ones", "1 + 1 + 1 + ..."},
        {"alternating-ones", "1 - 1 + 1 - 1 + ..."},
        {"alternating-integers", "1 - 2 + 3 - 4 + ..."},
        {"euler-factorial", "sum (-1)^n n! x^n (Stieltjes series)"},
        {"exp", "sum x^n/n!"},
        {"zeros", "0 + 0 + 0 + ..."},
    };
}

} // namespace sumkit
