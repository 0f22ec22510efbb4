#include "doctest.h"

#include "sbsearch/continued_fraction.hpp"

#include <functional>
#include <numeric>
#include <random>
#include <set>

using namespace sbs;

namespace {

SBPath P(const char* s) { return SBPath::parse(s); }

// Independent walk: one mediant per step from the (0/1, 1/0) bracket.
Fraction walk(const std::string& steps) {
    long ln = 0, ld = 1, hn = 1, hd = 0;
    for (char c : steps) {
        long mn = ln + hn, md = ld + hd;
        if (c == 'L') hn = mn, hd = md;
        else ln = mn, ld = md;
    }
    return Fraction(ln + hn, ld + hd);
}

}  // namespace

TEST_CASE("fraction construction reduces and validates") {
    CHECK(Fraction(2, 6) == Fraction(1, 3));
    CHECK(Fraction(0, 5) == Fraction(0, 1));
    CHECK(Fraction(7, 0).is_infinite());
    CHECK(Fraction(7, 0) == Fraction::infinity());
    CHECK_THROWS(Fraction(0, 0));
    CHECK_THROWS(Fraction(-1, 2));
    CHECK(Fraction::parse("10/4") == Fraction(5, 2));
    CHECK(Fraction::parse("inf").is_infinite());
    CHECK(Fraction::parse("7") == Fraction(7, 1));
    CHECK_THROWS(Fraction::parse("a/b"));
    CHECK(Fraction(9, 14).str() == "9/14");
    CHECK(Fraction::infinity().str() == "inf");
}

TEST_CASE("compare") {
    CHECK(compare(Fraction(1, 3), Fraction(2, 6)) == Cmp::Equal);
    CHECK(compare(Fraction(2, 3), Fraction(3, 4)) == Cmp::Less);
    CHECK(compare(Fraction::infinity(), Fraction(1000000000, 1)) == Cmp::Greater);
    CHECK(compare(Fraction(5, 1), Fraction::infinity()) == Cmp::Less);
    CHECK_THROWS(compare(Fraction::infinity(), Fraction::infinity()));
}

TEST_CASE("mediant") {
    CHECK(mediant(Fraction(0, 1), Fraction(1, 1)) == Fraction(1, 2));
    CHECK(mediant(Fraction(2, 3), Fraction(3, 4)) == Fraction(5, 7));
    CHECK(mediant(Fraction(0, 1), Fraction(1, 2)) == Fraction(1, 3));
    CHECK(mediant(Fraction(1, 1), Fraction::infinity()) == Fraction(2, 1));
    CHECK_THROWS(mediant(Fraction(3, 4), Fraction(2, 3)));
    CHECK_THROWS(mediant(Fraction(1, 2), Fraction(1, 2)));
}

TEST_CASE("mediant lies strictly between random pairs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(1, 100000);
    for (int i = 0; i < 20000; ++i) {
        Fraction a(d(rng), d(rng)), b(d(rng), d(rng));
        if (compare(a, b) == Cmp::Equal) continue;
        if (b < a) std::swap(a, b);
        Fraction m = mediant(a, b);
        REQUIRE(a < m);
        REQUIRE(m < b);
    }
}

TEST_CASE("continued fractions") {
    CHECK(to_continued_fraction(Fraction(5, 12)).str() == "[0;2,2,2]");
    CHECK(to_continued_fraction(Fraction(9, 14)).str() == "[0;1,1,1,4]");
    CHECK(to_continued_fraction(Fraction(1, 2)).str() == "[0;2]");
    CHECK(to_continued_fraction(Fraction(3, 1)).str() == "[3]");
    CHECK(to_continued_fraction(Fraction(1, 1)).str() == "[1]");
    CHECK_THROWS(to_continued_fraction(Fraction::infinity()));
    CHECK(ContinuedFraction::parse("[0; 1, 1, 1, 4]").evaluate() == Fraction(9, 14));
    CHECK(ContinuedFraction::parse("[3]").evaluate() == Fraction(3, 1));
    CHECK_THROWS(ContinuedFraction::parse("[0;2,1]"));
    CHECK_THROWS(ContinuedFraction::parse("0;2"));
    for (const char* s : {"[0;2,2,2]", "[0;1,1,1,4]", "[2;3,7]", "[5]"})
        CHECK(ContinuedFraction::parse(s).str() == s);
}

TEST_CASE("path codecs on known values") {
    CHECK(cf_to_sb_path(ContinuedFraction::parse("[0;1,1,1,4]")) == P("L^1 R^1 L^1 R^3"));
    CHECK(cf_to_sb_path(ContinuedFraction::parse("[0;2]")) == P("L^1"));
    CHECK(cf_to_sb_path(ContinuedFraction::parse("[0;2,2,2]")) == P("L^2 R^2 L^1"));
    CHECK_THROWS(cf_to_sb_path(ContinuedFraction::parse("[1;2]")));

    CHECK(sb_path_to_fraction(P("L^1 R^1 L^1 R^3")) == Fraction(9, 14));
    CHECK(sb_path_to_fraction(SBPath()) == Fraction(1, 1));
    CHECK(sb_path_to_fraction(P("L^2 R^2 L^1")) == Fraction(5, 12));

    CHECK(fraction_to_sb_path(Fraction(9, 14)) == P("LRLRRR"));
    CHECK(fraction_to_sb_path(Fraction(1, 2)) == P("L"));
    CHECK(fraction_to_sb_path(Fraction(2, 5)) == P("L^2 R^1"));
    CHECK_THROWS(fraction_to_sb_path(Fraction(1, 1)));
    CHECK_THROWS(fraction_to_sb_path(Fraction(0, 1)));
    CHECK_THROWS(fraction_to_sb_path(Fraction(3, 2)));
}

TEST_CASE("path text format") {
    CHECK(P("LLLR").str() == "L^3 R^1");
    CHECK(P("L^3 R^1").str() == "L^3 R^1");
    CHECK(P("").str() == "");
    CHECK(P("L^1 L^2").str() == "L^3");  // adjacent same-direction runs merge
    CHECK_THROWS(P("X"));
    CHECK_THROWS(P("L^"));
    CHECK_THROWS(P("L^0"));
    CHECK_THROWS(SBPath({{Dir::L, 1}, {Dir::L, 2}}));
    CHECK(P("R^2").str() == "R^2");
    CHECK(sb_path_to_fraction(P("R^2")) == Fraction(3, 1));
}

TEST_CASE("closed-form runs agree with a unit-step walk") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        std::string steps;
        int len = 1 + static_cast<int>(rng() % 20);
        for (int j = 0; j < len; ++j) steps += (rng() & 1) ? 'L' : 'R';
        REQUIRE(sb_path_to_fraction(P(steps.c_str())) == walk(steps));
    }
}

TEST_CASE("round trips for every denominator up to 1000") {
    long checked = 0;
    for (long b = 2; b <= 1000; ++b)
        for (long a = 1; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            Fraction f(a, b);
            SBPath p = fraction_to_sb_path(f);
            REQUIRE(sb_path_to_fraction(p) == f);
            REQUIRE(SBPath::parse(p.str()) == p);
            ContinuedFraction cf = to_continued_fraction(f);
            REQUIRE(cf.evaluate() == f);
            REQUIRE(ContinuedFraction::parse(cf.str()) == cf);
            ++checked;
        }
    CHECK(checked == 304191);
}

TEST_CASE("Farey determinant along all paths to depth 12") {
    long nodes = 0;
    std::function<void(long, long, long, long, int)> rec = [&](long ln, long ld, long hn, long hd, int depth) {
        REQUIRE(hn * ld - ln * hd == 1);
        ++nodes;
        if (depth == 12) return;
        long mn = ln + hn, md = ld + hd;
        rec(ln, ld, mn, md, depth + 1);
        rec(mn, md, hn, hd, depth + 1);
    };
    rec(0, 1, 1, 1, 0);
    CHECK(nodes == (1 << 13) - 1);
}

TEST_CASE("each fraction with denominator <= 200 appears exactly once in the tree") {
    std::set<std::pair<long, long>> seen;
    long visits = 0;
    // Descendants have larger denominators, so prune at 200.
    std::function<void(long, long, long, long)> rec = [&](long ln, long ld, long hn, long hd) {
        long mn = ln + hn, md = ld + hd;
        if (md > 200) return;
        ++visits;
        seen.insert({mn, md});
        rec(ln, ld, mn, md);
        rec(mn, md, hn, hd);
    };
    rec(0, 1, 1, 1);
    long expected = 0;
    for (long b = 2; b <= 200; ++b)
        for (long a = 1; a < b; ++a)
            if (std::gcd(a, b) == 1) ++expected;
    CHECK(visits == expected);
    CHECK(static_cast<long>(seen.size()) == expected);
}
