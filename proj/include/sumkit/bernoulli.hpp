#ifndef SUMKIT_BERNOULLI_HPP
#define SUMKIT_BERNOULLI_HPP

#include <vector>

#include "sumkit/rational.hpp"
#include "sumkit/scalar.hpp"

namespace sumkit {

/// B_0..B_K as exact rationals (convention B_1 = -1/2), via the
/// triangular recurrence sum_j binom(k+1, j) B_j = 0.
std::vector<Scalar> bernoulli_numbers(long K);

} // namespace sumkit

#endif
