#pragma once

#include "sbsearch/fraction.hpp"
#include "sbsearch/real.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sbs {

// Per-segment query budget 2*floor(log2 x) + 1.
unsigned G(std::uint64_t x);
unsigned G(const mpz_class& x);

enum class ScanMode { BaseCase, InductiveStep };

enum class Exec { Serial, Parallel };

// A constant c > 0, either an exact decimal or k / log2(u + v*sqrt(d)).
class BoundConstant {
public:
    static BoundConstant decimal(std::string_view text);
    static BoundConstant inverse_log(long k, long u, long v = 0, long d = 0);
    // "2.5849", "16/log2(73)", "8/log2(5+2sqrt6)" or a preset name.
    static BoundConstant parse(std::string_view text);

    static BoundConstant four_segment() { return inverse_log(16, 73); }
    static BoundConstant two_segment() { return inverse_log(10, 13); }
    static BoundConstant one_segment() { return inverse_log(5, 3); }
    static BoundConstant lower_bound() { return inverse_log(8, 5, 2, 6); }
    static BoundConstant three_segment() { return decimal("2.6646"); }
    static BoundConstant headline() { return decimal("2.5849"); }

    bool is_decimal() const { return decimal_; }
    const mpq_class& value() const { return value_; }
    const std::string& tag() const { return tag_; }
    std::string render(int digits) const;

    // Directed enclosure [lo, hi] of c at the precision of lo/hi.
    void enclose(mpfr_ptr lo, mpfr_ptr hi) const;

    // Exact test of S <= c * log2(num / 2^e).
    bool exact_holds(unsigned s, const mpz_class& num, unsigned e) const;

private:
    bool decimal_ = true;
    bool round_up_ = true;  // render upward unless it is a lower bound
    mpq_class value_;
    long k_ = 0, u_ = 0, v_ = 0, d_ = 0;
    std::string tag_;
};

using Tuple = std::vector<std::uint64_t>;

struct TupleScanReport {
    unsigned num_vars = 0;
    std::uint64_t top = 0;
    std::string constant;  // tag of the constant
    ScanMode mode = ScanMode::BaseCase;
    std::uint64_t tuples = 0;
    std::uint64_t exact_fallbacks = 0;  // undecided by the interval path
    std::vector<Tuple> violations;
    Tuple argmax_tuple;
    std::string max_ratio;  // sum of G over log2 of the right-hand side, 30 places
    double max_ratio_approx = 0;
};

// Right-hand side numerator for a tuple: d_l in base mode; in step mode the
// returned value is twice the right-hand side (so e = 1).
mpz_class segment_rhs_numerator(const Tuple& xs, ScanMode mode);

// Scan all tuples with product <= top for sum G(x_i) <= c * log2(rhs).
TupleScanReport verify_tuple_inequality(unsigned num_vars, std::uint64_t top, const BoundConstant& c,
                                        ScanMode mode, Exec exec = Exec::Parallel);

// Least product above which the relaxed inequality holds:
// base ceil(2^(terms/(c-2))), step ceil(2^((terms+c)/(c-2))).
mpz_class threshold(const BoundConstant& c, unsigned sum_terms, ScanMode mode);

// Multivariate polynomial with rational coefficients in x1..xn.
class Polynomial {
public:
    explicit Polynomial(unsigned nvars = 0) : n_(nvars) {}
    static Polynomial constant(unsigned nvars, const mpq_class& c);
    static Polynomial variable(unsigned nvars, unsigned i);  // x_{i+1}

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    mpq_class evaluate(const Tuple& xs) const;
    std::string str() const;
    std::size_t size() const { return terms_.size(); }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

private:
    unsigned n_;
    std::map<std::vector<unsigned>, mpq_class> terms_;
    void add_term(const std::vector<unsigned>& e, const mpq_class& c);
};

// d_l (base, start d=m=1) or d_l/d_{l-k} with m/d = 1/2 (step) as a polynomial.
Polynomial segment_polynomial(unsigned num_vars, ScanMode mode);

struct GrowthRates {
    Real phi_a, phi_b;
};
GrowthRates growth_rates(std::uint64_t a, std::uint64_t b);

// (G(a) + G(b)) / log2(phi_a * phi_b)
Real comparisons_coefficient(std::uint64_t a, std::uint64_t b);

struct WorstPair {
    std::uint64_t a = 0, b = 0;
    Real coefficient;
};
// Ties (within 2^-200) prefer the larger a.
WorstPair worst_pair(std::uint64_t max_ab, Exec exec = Exec::Parallel);

// Fraction at the end of the path (L^a R^b)^k.
Fraction worst_case_fraction(const mpz_class& a, const mpz_class& b, unsigned k);

}  // namespace sbs
