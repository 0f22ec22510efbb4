#pragma once

#include "sbsearch/continued_fraction.hpp"
#include "sbsearch/oracle.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sbs {

// Farey-neighbour bracket plus the direction of the next run.
struct SearchBracket {
    Fraction low;
    Fraction high;
    Dir direction;

    // Node reached after t steps in `direction`; t = 0 gives the far endpoint.
    Fraction probe(const mpz_class& t) const;
    // high.num*low.den - low.num*high.den
    mpz_class determinant() const;
};

// Does a probe answer mean "at or past alpha" for this direction?
bool crosses(Dir d, Cmp answer);

struct ExponentialResult {
    unsigned i = 0;        // last exponent tried
    mpz_class lo;          // largest step known not to cross
    mpz_class hi;          // first step known to cross
    std::optional<Fraction> hit;
    mpz_class hit_steps;
    bool exhausted = false;  // cap reached without crossing
};

// Probes 2^i - 1 steps for i = 1, 2, ... (clamped to cap when given).
ExponentialResult exponential_search(ComparisonOracle& oracle, const SearchBracket& bracket,
                                     const std::optional<mpz_class>& cap = std::nullopt);

struct BinaryResult {
    mpz_class x;
    std::optional<Fraction> hit;
};

// Minimal crossing step in (lo, hi]; hi must cross and lo must not.
BinaryResult segment_binary_search(ComparisonOracle& oracle, const SearchBracket& bracket, mpz_class lo,
                                   mpz_class hi);

struct Segment {
    mpz_class x;
    mpz_class d;  // denominator after x steps
    mpz_class m;  // denominator after x - 1 steps
    std::uint64_t queries = 0;
};

struct SearchTrace {
    std::vector<Segment> segments;
    std::uint64_t total_queries = 0;
    bool determinant_ok = true;  // every bracket had determinant 1
};

struct SearchResult {
    Fraction result;
    SearchTrace trace;
};

// Hidden value must be a rational in (0,1).
SearchResult rational_search_unbounded(ComparisonOracle& oracle);
// Hidden denominator must be <= n; no probe has a denominator above n.
SearchResult rational_search_bounded(ComparisonOracle& oracle, const mpz_class& n);

}  // namespace sbs
