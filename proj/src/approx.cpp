#include "sbsearch/approx.hpp"

#include "sbsearch/km.hpp"
#include "sbsearch/search.hpp"

#include <stdexcept>

namespace sbs {

namespace {

// Is node f (on the side of alpha given by `far`) within delta of alpha?
// Far side: f - delta <= alpha for RIGHT runs, f + delta >= alpha for LEFT.
// Near side is the mirror image.
bool within(ComparisonOracle& oracle, const Fraction& f, const mpq_class& delta, Dir d, bool far) {
    const bool above = (d == Dir::R) == far;  // f lies above alpha
    if (above) return oracle.compare(f.to_mpq() - delta) != Cmp::Greater;
    return oracle.compare(f.to_mpq() + delta) != Cmp::Less;
}

}  // namespace

ApproxResult approximate_unknown(ComparisonOracle& oracle, const Fraction& delta) {
    if (delta.is_infinite() || delta.num() == 0) throw std::invalid_argument("delta must be a positive fraction");
    const mpq_class dq = delta.to_mpq();
    const std::uint64_t start = oracle.count();
    SearchBracket br{Fraction(0, 1), Fraction::infinity(), Dir::R};
    for (;;) {
        ExponentialResult e = exponential_search(oracle, br);
        mpz_class x;
        if (e.hit) x = e.hit_steps;
        else if (e.hi - e.lo > 1) x = segment_binary_search(oracle, br, e.lo, e.hi).x;
        else x = e.hi;

        Fraction fx = br.probe(x);
        Fraction fx1 = br.probe(x - 1);
        const bool in_x = within(oracle, fx, dq, br.direction, true);
        // With x = 1 the near node is a bracket endpoint, already known to be
        // out of range (or a sentinel).
        const bool in_x1 = x > 1 && within(oracle, fx1, dq, br.direction, false);
        if (in_x1) {
            // Smallest z in [1, x-1] whose node is in range; x-1 is.
            mpz_class lo = 0, hi = x - 1;
            while (hi - lo > 1) {
                mpz_class mid = (lo + hi) / 2;
                if (within(oracle, br.probe(mid), dq, br.direction, false)) hi = mid;
                else lo = mid;
            }
            return {br.probe(hi), oracle.count() - start};
        }
        if (in_x) return {fx, oracle.count() - start};
        if (br.direction == Dir::L) br = {fx, fx1, Dir::R};
        else br = {fx1, fx, Dir::L};
    }
}

Fraction best_approx_known(const Fraction& value_lo, const Fraction& value_hi, const Fraction& delta) {
    if (delta.is_infinite() || delta.num() == 0) throw std::invalid_argument("delta must be a positive fraction");
    const mpq_class lo = value_lo.to_mpq(), hi = value_hi.to_mpq(), d = delta.to_mpq();
    if (hi < lo) throw std::invalid_argument("enclosure is empty");
    if (2 * (hi - lo) > d) throw std::invalid_argument("enclosure wider than delta/2");
    const mpq_class a = hi - d, b = lo + d;
    if (sgn(a) <= 0) {
        // Least-denominator positive fraction in (0, b] is 1/ceil(1/b).
        mpq_class inv = 1 / b;
        mpz_class q;
        mpz_cdiv_q(q.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
        return Fraction(mpz_class(1), q);
    }
    return smallest_denominator_in_interval(Fraction::from_mpq(a), Fraction::from_mpq(b));
}

std::uint64_t approx_query_count(ComparisonOracle& oracle, const Fraction& delta) {
    return approximate_unknown(oracle, delta).queries;
}

Fraction decimal_delta(unsigned k) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, k);
    return Fraction(mpz_class(1), den);
}

}  // namespace sbs
