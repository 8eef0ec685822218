#ifndef SUMKIT_SERIES_IO_HPP
#define SUMKIT_SERIES_IO_HPP

#include <string>
#include <vector>

#include "sumkit/sequence.hpp"

namespace sumkit {

/// Series-definition file:
///   {"name": ..., "kind": "explicit"|"catalog",
///    "sign_convention": "as-is"|"alternating-implied",
///    "coefficients": ["3/4", "-21/8", ...]}
/// Rationals travel as "p/q" strings, never floats.
CoefficientSequence load_series_json(const std::string& text);
CoefficientSequence load_series_file(const std::string& path);
std::string series_to_json(const std::string& name, const CoefficientSequence& seq, long count);

/// Parse a comma-separated list of "p/q" rationals.
std::vector<Scalar> parse_rational_list(const std::string& text);

} // namespace sumkit

#endif
