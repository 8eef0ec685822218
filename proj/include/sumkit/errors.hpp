#ifndef SUMKIT_ERRORS_HPP
#define SUMKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sumkit {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A sequence generator could not supply the requested number of terms.
struct GeneratorExhausted : Error {
    explicit GeneratorExhausted(const std::string& msg) : Error(msg) {}
};

// Iterative refinement failed to stabilize within its budget.
struct ConvergenceFailure : Error {
    explicit ConvergenceFailure(const std::string& msg) : Error(msg) {}
};

// Every entry of a transformed row was a 0/0 case.
struct DegenerateDenominator : Error {
    explicit DegenerateDenominator(const std::string& msg) : Error(msg) {}
};

struct InsufficientTerms : Error {
    explicit InsufficientTerms(const std::string& msg) : Error(msg) {}
};

// The summation axioms admit no finite value for the input.
struct InconsistentSummation : Error {
    explicit InconsistentSummation(const std::string& msg) : Error(msg) {}
};

struct SingularSystem : Error {
    explicit SingularSystem(const std::string& msg) : Error(msg) {}
};

// A continuation denominator vanishes on the integration path.
struct PoleOnPath : Error {
    explicit PoleOnPath(const std::string& msg) : Error(msg) {}
};

// Even/odd coefficient tails disagree with every endpoint pair.
struct TailMismatch : Error {
    explicit TailMismatch(const std::string& msg) : Error(msg) {}
};

struct ModeBudgetExceeded : Error {
    explicit ModeBudgetExceeded(const std::string& msg) : Error(msg) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct ResourceLimit : Error {
    explicit ResourceLimit(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace sumkit

#endif
