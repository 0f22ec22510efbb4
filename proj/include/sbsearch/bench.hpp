#pragma once

#include "sbsearch/bounds.hpp"
#include "sbsearch/fraction.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace sbs {

inline constexpr const char* kRngName = "mt19937_64";

struct TrialPlan {
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
};

struct Sample {
    mpz_class a, b;  // not reduced
};

// Uniform integer in [lo, hi] by rejection on 64-bit words.
mpz_class uniform_mpz(std::mt19937_64& rng, const mpz_class& lo, const mpz_class& hi);

// b uniform in [2, n], then a uniform in [1, b-1].
std::vector<Sample> sample_trials(const TrialPlan& plan, const mpz_class& n);

enum class Algorithm { Km, Csb, CsbBounded };
const char* algorithm_name(Algorithm a);
Algorithm parse_algorithm(const std::string& s);

struct BenchRecord {
    mpz_class n;
    std::string algorithm;
    std::uint64_t max_queries = 0;
    double avg_queries = 0;
    double avg_time_s = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t failures = 0;  // wrong answers; a record with failures is flagged
    bool parallel_timing = false;
};

std::vector<BenchRecord> run_search_bench(const TrialPlan& plan, const mpz_class& n,
                                          const std::vector<Algorithm>& algorithms, Exec exec = Exec::Parallel);

struct ApproxCell {
    std::string constant;  // pi, e, sqrt2, sqrt5
    unsigned delta_exp = 0;
    Fraction result;
    std::uint64_t queries = 0;
    double avg_time_s = 0;
    bool verified = false;  // equals the known-value answer
    std::optional<Fraction> expected_fraction;
    std::optional<std::uint64_t> expected_queries;
};

// Certified enclosure of a named constant, width well below 2^-(bits-8).
std::pair<Fraction, Fraction> constant_enclosure(const std::string& name, long bits = 512);

std::vector<ApproxCell> run_approx_bench(const std::vector<std::string>& constants, unsigned min_exp,
                                         unsigned max_exp, unsigned repeats = 1, Exec exec = Exec::Parallel);

// Published reference values for the four constants at delta = 10^-1..10^-15.
extern const std::vector<std::string> kReferenceConstants;  // pi, e, sqrt2, sqrt5
std::optional<Fraction> reference_approximation(const std::string& constant, unsigned delta_exp);
std::optional<std::uint64_t> reference_query_count(const std::string& constant, unsigned delta_exp);

struct ReferenceSearchStats {
    unsigned n_exp;
    std::uint64_t km_max;
    double km_avg;
    std::uint64_t csb_max;
    double csb_avg;
};
// Published search statistics (1000 trials per n).
const std::vector<ReferenceSearchStats>& reference_search_stats();

void emit_csv(const std::vector<BenchRecord>& records, std::ostream& out);
void emit_plot_data(const std::vector<BenchRecord>& records, std::ostream& out);
void emit_json(const std::vector<BenchRecord>& records, std::ostream& out);
void emit_approx_csv(const std::vector<ApproxCell>& cells, std::ostream& out);
void emit_approx_json(const std::vector<ApproxCell>& cells, std::ostream& out);

std::string format_number(double v, int significant);

}  // namespace sbs
