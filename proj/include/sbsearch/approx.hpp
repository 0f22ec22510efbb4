#pragma once

#include "sbsearch/oracle.hpp"

#include <cstdint>

namespace sbs {

struct ApproxResult {
    Fraction result;
    std::uint64_t queries = 0;
};

// Least-denominator positive fraction in [alpha - delta, alpha + delta],
// found with shifted comparison queries over the tree spanning (0, inf).
ApproxResult approximate_unknown(ComparisonOracle& oracle, const Fraction& delta);

// Same answer from a known enclosure [value_lo, value_hi] of the real; the
// enclosure width must be <= delta/2. Uses only the certain subset
// [value_hi - delta, value_lo + delta].
Fraction best_approx_known(const Fraction& value_lo, const Fraction& value_hi, const Fraction& delta);

std::uint64_t approx_query_count(ComparisonOracle& oracle, const Fraction& delta);

// 10^-k as an exact fraction.
Fraction decimal_delta(unsigned k);

}  // namespace sbs
