#ifndef SUMKIT_SEQUENCE_HPP
#define SUMKIT_SEQUENCE_HPP

#include <functional>
#include <string>
#include <vector>

#include "sumkit/scalar.hpp"

namespace sumkit {

enum class SignConvention {
    AsIs,               // series is sum a_n x^n with stored a_n
    AlternatingImplied, // stored a_n >= 0, series is sum (-1)^n a_n x^n
};

/// Finite or rule-generated list of series coefficients with a sign
/// convention. Values are immutable after construction; generator-backed
/// sequences recompute terms on demand.
class CoefficientSequence {
public:
    using Generator = std::function<Scalar(long)>;

    CoefficientSequence() = default;
    CoefficientSequence(std::vector<Scalar> terms, SignConvention sign,
                        std::string origin = "explicit");
    CoefficientSequence(Generator gen, SignConvention sign, std::string origin);

    /// Stored coefficient a_n (before the sign convention is applied).
    Scalar term(long n) const;
    /// Coefficient of x^n in the series, sign convention applied.
    Scalar signed_term(long n) const;

    bool extendable_to(long n) const;
    long stored_size() const { return static_cast<long>(terms_.size()); }
    bool has_generator() const { return static_cast<bool>(gen_); }

    SignConvention sign_convention() const { return sign_; }
    const std::string& origin() const { return origin_; }

    std::vector<Scalar> prefix(long count) const;        // a_0..a_{count-1}
    std::vector<Scalar> signed_prefix(long count) const; // signed

private:
    std::vector<Scalar> terms_;
    Generator gen_;
    SignConvention sign_ = SignConvention::AsIs;
    std::string origin_ = "explicit";
};

/// Partial sums A_0..A_N of a series; values[k] - values[k-1] is term k.
class PartialSums {
public:
    PartialSums() = default;
    explicit PartialSums(std::vector<Scalar> values) : values_(std::move(values)) {}

    const std::vector<Scalar>& values() const { return values_; }
    const Scalar& operator[](std::size_t i) const { return values_[i]; }
    long size() const { return static_cast<long>(values_.size()); }

private:
    std::vector<Scalar> values_;
};

/// A_0..A_N of sum a_n point^n, exact whenever all inputs are exact.
PartialSums partial_sums(const CoefficientSequence& seq, const Scalar& point, long N);

/// Built-in series. Unknown names throw ParseError.
CoefficientSequence catalog_series(const std::string& name);
std::vector<std::pair<std::string, std::string>> catalog_listing();

/// sum (-1)^n (n+1)^p x^n, the alternating integer-power series.
CoefficientSequence alternating_power_series(long p);
/// Periodic coefficient pattern repeated forever (as-is signs).
CoefficientSequence periodic_series(std::vector<Scalar> pattern);

} // namespace sumkit

#endif
