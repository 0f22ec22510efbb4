#include "sbsearch/km.hpp"

#include <stdexcept>

namespace sbs {

Fraction GridInterval::lower() const { return Fraction(mu, n * n); }
Fraction GridInterval::upper() const { return Fraction(mu + 1, n * n); }

std::variant<GridInterval, ExactHit> km_phase1(ComparisonOracle& oracle, const mpz_class& n) {
    if (n < 2) throw std::invalid_argument("bound must be >= 2");
    const mpz_class cells = n * n;
    mpz_class lo = 0, hi = cells;
    while (hi - lo > 1) {
        mpz_class mid = (lo + hi) / 2;
        Fraction probe(mid, cells);
        Cmp a = oracle.compare(probe);
        if (a == Cmp::Equal) return ExactHit{probe};
        if (a == Cmp::Less) lo = mid;
        else hi = mid;
    }
    return GridInterval{lo, n};
}

namespace {

// Largest integer strictly below a/b (b > 0).
mpz_class floor_strictly_below(const mpq_class& q) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return c - 1;
}

}  // namespace

Fraction smallest_denominator_in_interval(const Fraction& lo, const Fraction& hi) {
    if (lo.is_infinite() || hi.is_infinite()) throw std::domain_error("interval endpoints must be finite");
    if (hi < lo) throw std::invalid_argument("empty interval: lo > hi");
    if (lo.num() == 0) return Fraction(0, 1);

    const mpq_class a = lo.to_mpq(), b = hi.to_mpq();
    // Bracket l < a <= b < h, current node is the mediant.
    mpz_class ln = 0, ld = 1, hn = 1, hd = 0;
    for (;;) {
        mpz_class mn = ln + hn, md = ld + hd;
        mpq_class m(mn, md);
        if (a <= m && m <= b) return Fraction::from_coprime(mn, md);
        if (m < a) {
            // Move right while (l + t*h) stays below a.
            mpq_class num = a * ld - ln;
            mpq_class den = hn - a * hd;
            mpz_class t = floor_strictly_below(num / den);
            ln += t * hn;
            ld += t * hd;
        } else {
            // Move left while (h + t*l) stays above b.
            mpq_class num = hn - b * hd;
            mpq_class den = b * ld - ln;
            mpz_class t = floor_strictly_below(num / den);
            hn += t * ln;
            hd += t * ld;
        }
    }
}

KmResult km_search(ComparisonOracle& oracle, const mpz_class& n) {
    const std::uint64_t start = oracle.count();
    auto phase1 = km_phase1(oracle, n);
    KmResult r;
    if (auto* hit = std::get_if<ExactHit>(&phase1)) {
        r.result = hit->value;
        r.exact_hit = r.confirmed = true;
    } else {
        const GridInterval& cell = std::get<GridInterval>(phase1);
        r.result = smallest_denominator_in_interval(cell.lower(), cell.upper());
        r.confirmed = oracle.compare(r.result) == Cmp::Equal;
    }
    r.queries = oracle.count() - start;
    return r;
}

}  // namespace sbs
