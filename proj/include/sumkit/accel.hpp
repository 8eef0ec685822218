#ifndef SUMKIT_ACCEL_HPP
#define SUMKIT_ACCEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "sumkit/sequence.hpp"

namespace sumkit {
namespace accel {

/// Rows of transformed sequences built from a partial-sum sequence.
/// Entries with a vanishing transform denominator are absent, not zero.
struct AccelTable {
    struct Row {
        std::string label;
        std::vector<std::optional<Scalar>> values;
    };
    std::vector<Row> rows;
    PartialSums source;

    /// Deepest defined entry (last row, last defined value).
    Scalar best() const;
};

/// Iterated Shanks transformation. Row 0 is the input; row j applies
/// s = (A_{N+1} A_{N-1} - A_N^2) / (A_{N+1} - 2 A_N + A_{N-1})
/// to row j-1, so row j is two entries shorter. Throws
/// DegenerateDenominator only if an entire row comes out absent.
AccelTable shanks(const PartialSums& sums, int iterations);

/// Order-k Richardson extrapolation
///   s = (1/k!) sum_{l=0..k} (-1)^(k-l) (N+l)^k binom(k, l) A_{N+l}.
/// n_start counts summed terms: values[i] is treated as the (i+1)-term
/// partial sum A_{i+1}, so the window starts at values[n_start-1].
Scalar richardson(const PartialSums& sums, int order, long n_start);

/// All order-k extrapolants over the valid windows, as table rows 0..k
/// (row 0 is the input); row j is j entries shorter than row 0.
AccelTable richardson_table(const PartialSums& sums, int order);

/// Richardson-type elimination for values v_j = s + sum_i c_i q^(-i j)
/// sampled on a geometric ladder (node ratio q > 1), i.e. polynomial
/// extrapolation to 0 in the variable h_j = q^-j. Exact on exact input.
/// Returns the extrapolant and the last correction size as a spread hint.
/// With log_aware set, every power is eliminated twice, which also
/// annihilates h^k log h corrections (confluent modes on a geometric
/// ladder) at the cost of half the elimination depth.
std::pair<Scalar, Scalar> richardson_geometric(const std::vector<Scalar>& values, long q,
                                               bool log_aware = false);

} // namespace accel
} // namespace sumkit

#endif
