#pragma once

#include "sbsearch/fraction.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sbs {

// [a0; a1, ..., ak], canonical (ak >= 2 whenever k >= 1).
struct ContinuedFraction {
    std::vector<mpz_class> terms;

    Fraction evaluate() const;
    std::string str() const;  // "[0;1,1,1,4]"
    static ContinuedFraction parse(std::string_view text);

    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

ContinuedFraction to_continued_fraction(const Fraction& f);

enum class Dir { L, R };

inline Dir flip(Dir d) { return d == Dir::L ? Dir::R : Dir::L; }

struct Run {
    Dir dir;
    mpz_class exp;
    friend bool operator==(const Run&, const Run&) = default;
};

// Run-length Stern-Brocot descent from the root 1/1 (bracket 0/1, 1/0).
// Paths of values in (0,1) start with L.
class SBPath {
public:
    SBPath() = default;
    explicit SBPath(std::vector<Run> runs);  // validates alternation and exponents

    const std::vector<Run>& runs() const { return runs_; }
    bool empty() const { return runs_.empty(); }

    // "L^1 R^1 L^1 R^3"; empty path prints as "".
    std::string str() const;
    // Accepts the run form above or the compact form "LRLRRR".
    static SBPath parse(std::string_view text);

    friend bool operator==(const SBPath&, const SBPath&) = default;

private:
    std::vector<Run> runs_;
};

SBPath cf_to_sb_path(const ContinuedFraction& cf);
Fraction sb_path_to_fraction(const SBPath& path);
SBPath fraction_to_sb_path(const Fraction& f);

}  // namespace sbs
