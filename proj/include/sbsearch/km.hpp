#pragma once

#include "sbsearch/oracle.hpp"

#include <cstdint>
#include <variant>

namespace sbs {

// Cell [mu/n^2, (mu+1)/n^2].
struct GridInterval {
    mpz_class mu;
    mpz_class n;
    Fraction lower() const;
    Fraction upper() const;
};

struct ExactHit {
    Fraction value;
};

// Bisection over the n^2 grid; a probe landing exactly on alpha ends early.
std::variant<GridInterval, ExactHit> km_phase1(ComparisonOracle& oracle, const mpz_class& n);

// Fraction of least denominator in the closed interval [lo, hi], 0 <= lo <= hi.
// Uses run-length Stern-Brocot descent; makes no oracle queries.
Fraction smallest_denominator_in_interval(const Fraction& lo, const Fraction& hi);

struct KmResult {
    Fraction result;
    std::uint64_t queries = 0;
    bool exact_hit = false;  // phase 1 landed on alpha
    bool confirmed = false;  // oracle agreed result == alpha
};

// Phase 1, query-free extraction, then one confirming query unless phase 1
// already hit alpha exactly.
KmResult km_search(ComparisonOracle& oracle, const mpz_class& n);

}  // namespace sbs
