#include "sbsearch/search.hpp"

#include <stdexcept>

namespace sbs {

Fraction SearchBracket::probe(const mpz_class& t) const {
    if (direction == Dir::L)
        return Fraction::from_coprime(high.num() + t * low.num(), high.den() + t * low.den());
    return Fraction::from_coprime(low.num() + t * high.num(), low.den() + t * high.den());
}

mpz_class SearchBracket::determinant() const { return high.num() * low.den() - low.num() * high.den(); }

bool crosses(Dir d, Cmp answer) {
    if (answer == Cmp::Equal) return true;
    return d == Dir::L ? answer == Cmp::Less : answer == Cmp::Greater;
}

ExponentialResult exponential_search(ComparisonOracle& oracle, const SearchBracket& bracket,
                                     const std::optional<mpz_class>& cap) {
    ExponentialResult r;
    r.lo = 0;
    if (cap && *cap < 1) {
        r.exhausted = true;
        return r;
    }
    for (unsigned i = 1;; ++i) {
        mpz_class t = (mpz_class(1) << i) - 1;
        if (cap && t > *cap) t = *cap;
        r.i = i;
        Cmp a = oracle.compare(bracket.probe(t));
        if (a == Cmp::Equal) {
            r.hit = bracket.probe(t);
            r.hit_steps = t;
            r.hi = t;
            return r;
        }
        if (crosses(bracket.direction, a)) {
            r.hi = t;
            return r;
        }
        r.lo = t;
        if (cap && t == *cap) {
            r.exhausted = true;
            return r;
        }
    }
}

BinaryResult segment_binary_search(ComparisonOracle& oracle, const SearchBracket& bracket, mpz_class lo,
                                   mpz_class hi) {
    if (lo >= hi) throw std::invalid_argument("segment_binary_search needs lo < hi");
    BinaryResult r;
    while (hi - lo > 1) {
        mpz_class mid = (lo + hi) / 2;
        Fraction f = bracket.probe(mid);
        Cmp a = oracle.compare(f);
        if (a == Cmp::Equal) {
            r.x = mid;
            r.hit = std::move(f);
            return r;
        }
        if (crosses(bracket.direction, a)) hi = mid;
        else lo = mid;
    }
    r.x = hi;
    return r;
}

namespace {

SearchResult run_search(ComparisonOracle& oracle, const mpz_class* bound) {
    SearchBracket br{Fraction(0, 1), Fraction(1, 1), Dir::L};
    SearchTrace trace;
    const std::uint64_t start = oracle.count();
    for (;;) {
        const std::uint64_t before = oracle.count();
        std::optional<mpz_class> cap;
        if (bound) {
            // Largest step whose probe denominator stays within the bound.
            const Fraction& near = br.direction == Dir::L ? br.high : br.low;
            const Fraction& far = br.direction == Dir::L ? br.low : br.high;
            mpz_class room = *bound - near.den();
            cap = sgn(room) < 0 ? mpz_class(0) : mpz_class(room / far.den());
        }
        ExponentialResult e = exponential_search(oracle, br, cap);
        if (e.exhausted)
            throw std::domain_error("hidden value is not a fraction with denominator <= the bound");

        mpz_class x;
        std::optional<Fraction> hit = e.hit;
        if (hit) {
            x = e.hit_steps;
        } else if (e.hi - e.lo > 1) {
            BinaryResult b = segment_binary_search(oracle, br, e.lo, e.hi);
            x = b.x;
            hit = b.hit;
        } else {
            x = e.hi;
        }

        Fraction fx = br.probe(x);
        Fraction fx1 = br.probe(x - 1);
        trace.segments.push_back({x, fx.den(), fx1.den(), oracle.count() - before});
        if (hit) {
            trace.total_queries = oracle.count() - start;
            return {*hit, std::move(trace)};
        }
        if (br.direction == Dir::L) br = {fx, fx1, Dir::R};
        else br = {fx1, fx, Dir::L};
        if (br.determinant() != 1) trace.determinant_ok = false;
    }
}

}  // namespace

SearchResult rational_search_unbounded(ComparisonOracle& oracle) { return run_search(oracle, nullptr); }

SearchResult rational_search_bounded(ComparisonOracle& oracle, const mpz_class& n) {
    if (n < 2) throw std::invalid_argument("bound must be >= 2");
    return run_search(oracle, &n);
}

}  // namespace sbs
