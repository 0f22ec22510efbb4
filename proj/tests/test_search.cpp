#include "doctest.h"

#include "sbsearch/bounds.hpp"
#include "sbsearch/search.hpp"

#include <cmath>
#include <numeric>

using namespace sbs;

namespace {

std::vector<long> exponents(const SearchTrace& t) {
    std::vector<long> out;
    for (const Segment& s : t.segments) out.push_back(s.x.get_si());
    return out;
}

// Unit-step descent from 1/1: record each move until the node equals a/b.
std::vector<long> naive_runs(long a, long b) {
    long ln = 0, ld = 1, hn = 1, hd = 0;
    std::vector<long> runs;
    char last = 0;
    for (;;) {
        long mn = ln + hn, md = ld + hd;
        long s = a * md - mn * b;  // sign(a/b - node)
        if (s == 0) return runs;
        char dir = s < 0 ? 'L' : 'R';
        if (dir == last) ++runs.back();
        else runs.push_back(1);
        last = dir;
        if (s < 0) hn = mn, hd = md;
        else ln = mn, ld = md;
    }
}

// Rational oracle that records the largest probe denominator.
class RecordingOracle final : public ComparisonOracle {
public:
    explicit RecordingOracle(Fraction h) : hidden_(h.to_mpq()) {}
    std::string describe() const override { return "recording"; }
    mpz_class max_den = 0;

protected:
    Cmp decide(const mpq_class& beta) override {
        if (beta.get_den() > max_den) max_den = beta.get_den();
        int c = cmp(beta, hidden_);  // sign(beta - alpha), as RationalOracle
        return c < 0 ? Cmp::Less : (c > 0 ? Cmp::Greater : Cmp::Equal);
    }

private:
    mpq_class hidden_;
};

}  // namespace

TEST_CASE("bracket probes use the closed form") {
    SearchBracket br{Fraction(0, 1), Fraction(1, 1), Dir::L};
    CHECK(br.probe(1) == Fraction(1, 2));
    CHECK(br.probe(3) == Fraction(1, 4));
    CHECK(br.probe(0) == Fraction(1, 1));
    CHECK(br.determinant() == 1);
    SearchBracket right{Fraction(1, 2), Fraction(1, 1), Dir::R};
    CHECK(right.probe(1) == Fraction(2, 3));
    CHECK(right.probe(2) == Fraction(3, 4));
}

TEST_CASE("exponential search examples") {
    SearchBracket root{Fraction(0, 1), Fraction(1, 1), Dir::L};
    {
        RationalOracle o(Fraction(1, 5));
        auto r = exponential_search(o, root);
        CHECK(r.i == 3);
        CHECK(!r.hit);
        CHECK(r.lo == 3);
        CHECK(r.hi == 7);
        CHECK(o.count() == 3);
    }
    {
        RationalOracle o(Fraction(1, 2));
        auto r = exponential_search(o, root);
        REQUIRE(r.hit);
        CHECK(*r.hit == Fraction(1, 2));
        CHECK(o.count() == 1);
    }
    {
        RationalOracle o(Fraction(9, 14));
        auto r = exponential_search(o, SearchBracket{Fraction(1, 2), Fraction(1, 1), Dir::R});
        CHECK(r.i == 1);
        CHECK(r.hi == 1);
        CHECK(o.count() == 1);
    }
    {
        RationalOracle o(Fraction(1, 5));
        auto r = exponential_search(o, root, mpz_class(2));
        CHECK(r.exhausted);
        CHECK(o.count() == 2);  // probes 1 and min(3, 2)
    }
}

TEST_CASE("segment binary search examples") {
    SearchBracket root{Fraction(0, 1), Fraction(1, 1), Dir::L};
    {
        RationalOracle o(Fraction(1, 3));
        auto r = segment_binary_search(o, root, 0, 1);
        CHECK(r.x == 1);
        CHECK(o.count() == 0);
    }
    {
        RationalOracle o(Fraction(1, 5));
        auto r = segment_binary_search(o, root, 3, 7);
        CHECK(r.x == 4);
        REQUIRE(r.hit);
        CHECK(*r.hit == Fraction(1, 5));
        CHECK(o.count() == 2);
    }
    {
        // 5/7 = L R^2 L^1: the interior R run from (1/2, 1/1) has length 2.
        RationalOracle o(Fraction(5, 7));
        SearchBracket br{Fraction(1, 2), Fraction(1, 1), Dir::R};
        auto r = segment_binary_search(o, br, 1, 3);
        CHECK(r.x == 2);
        CHECK(o.count() <= 2);
        CHECK(fraction_to_sb_path(Fraction(5, 7)).runs()[1].exp == 2);
    }
    {
        RationalOracle o(Fraction(1, 5));
        CHECK_THROWS(segment_binary_search(o, root, 3, 3));
    }
}

TEST_CASE("unbounded search examples") {
    {
        RationalOracle o(Fraction(9, 14));
        auto r = rational_search_unbounded(o);
        CHECK(r.result == Fraction(9, 14));
        CHECK(exponents(r.trace) == std::vector<long>{1, 1, 1, 3});
        std::vector<long> d, m;
        for (const Segment& s : r.trace.segments) d.push_back(s.d.get_si()), m.push_back(s.m.get_si());
        CHECK(d == std::vector<long>{2, 3, 5, 14});
        CHECK(m == std::vector<long>{1, 2, 3, 11});
    }
    {
        RationalOracle o(Fraction(1, 2));
        auto r = rational_search_unbounded(o);
        CHECK(r.result == Fraction(1, 2));
        CHECK(r.trace.total_queries == 1);
    }
    {
        RationalOracle o(Fraction(113, 355));
        auto r = rational_search_unbounded(o);
        CHECK(r.result == Fraction(113, 355));
        CHECK(r.trace.total_queries <= 2.5849 * std::log2(355.0));
    }
}

TEST_CASE("bounded search") {
    {
        RationalOracle u(Fraction(1, 1000)), b(Fraction(1, 1000));
        auto ru = rational_search_unbounded(u);
        auto rb = rational_search_bounded(b, 1000);
        CHECK(ru.result == rb.result);
        CHECK(rb.trace.total_queries < ru.trace.total_queries);
    }
    {
        RationalOracle o(Fraction(1, 2));
        auto r = rational_search_bounded(o, 2);
        CHECK(r.result == Fraction(1, 2));
        CHECK(r.trace.total_queries == 1);
    }
    {
        RationalOracle o(Fraction(1, 2));
        CHECK_THROWS(rational_search_bounded(o, 1));
    }
    {
        // Denominator above the bound violates the contract and is reported.
        RationalOracle o(Fraction(1, 7));
        CHECK_THROWS_AS(rational_search_bounded(o, 5), std::domain_error);
    }
    long count = 0;
    for (long den = 2; den <= 50; ++den)
        for (long a = 1; a < den; ++a) {
            if (std::gcd(a, den) != 1) continue;
            RationalOracle u(Fraction(a, den));
            RecordingOracle b(Fraction(a, den));
            auto ru = rational_search_unbounded(u);
            auto rb = rational_search_bounded(b, 50);
            REQUIRE(ru.result == rb.result);
            // Capped probes never exceed the bound; the count may differ
            // either way since the binary phase covers a different range.
            REQUIRE(b.max_den <= 50);
            REQUIRE(rb.trace.total_queries == b.count());
            ++count;
        }
    CHECK(count == 773);  // sum of phi(b) for b <= 50 is 774; 1/1 is outside (0,1)
}

TEST_CASE("trace invariants for every fraction with denominator <= 300") {
    for (long den = 2; den <= 300; ++den)
        for (long a = 1; a < den; ++a) {
            if (std::gcd(a, den) != 1) continue;
            RationalOracle o(Fraction(a, den));
            auto r = rational_search_unbounded(o);
            REQUIRE(r.result == Fraction(a, den));
            REQUIRE(r.trace.determinant_ok);
            REQUIRE(exponents(r.trace) == naive_runs(a, den));
            mpz_class d_prev = 1, m_prev = 1;
            std::uint64_t sum = 0;
            const auto& segs = r.trace.segments;
            for (std::size_t i = 0; i < segs.size(); ++i) {
                const Segment& s = segs[i];
                REQUIRE(s.d == d_prev + s.x * m_prev);
                REQUIRE(s.m == d_prev + (s.x - 1) * m_prev);
                REQUIRE(s.d == s.m + m_prev);
                REQUIRE(2 * s.m >= s.d);
                const bool last = i + 1 == segs.size();
                REQUIRE(s.queries <= G(s.x) + (last ? 1u : 0u));
                sum += s.queries;
                d_prev = s.d;
                m_prev = s.m;
            }
            REQUIRE(sum == r.trace.total_queries);
            REQUIRE(r.trace.total_queries == o.count());
        }
}
