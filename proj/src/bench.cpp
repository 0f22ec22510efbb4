#include "sbsearch/bench.hpp"

#include "sbsearch/approx.hpp"
#include "sbsearch/km.hpp"
#include "sbsearch/oracle.hpp"
#include "sbsearch/search.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace sbs {

mpz_class uniform_mpz(std::mt19937_64& rng, const mpz_class& lo, const mpz_class& hi) {
    if (hi < lo) throw std::invalid_argument("uniform_mpz: empty range");
    const mpz_class span = hi - lo + 1;
    const size_t bits = mpz_sizeinbase(span.get_mpz_t(), 2);
    const size_t words = (bits + 63) / 64;
    mpz_class r;
    for (;;) {
        r = 0;
        for (size_t w = 0; w < words; ++w) {
            r <<= 64;
            std::uint64_t v = rng();
            r += mpz_class(static_cast<unsigned long>(v >> 32)) << 32;
            r += static_cast<unsigned long>(v & 0xffffffffu);
        }
        // Keep only `bits` low bits, then reject values past the span.
        mpz_fdiv_r_2exp(r.get_mpz_t(), r.get_mpz_t(), bits);
        if (r < span) return lo + r;
    }
}

std::vector<Sample> sample_trials(const TrialPlan& plan, const mpz_class& n) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    std::mt19937_64 rng(plan.seed);
    std::vector<Sample> out;
    out.reserve(plan.trials);
    for (std::uint64_t i = 0; i < plan.trials; ++i) {
        mpz_class b = uniform_mpz(rng, 2, n);
        mpz_class a = uniform_mpz(rng, 1, b - 1);
        out.push_back({std::move(a), std::move(b)});
    }
    return out;
}

const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Km: return "km";
        case Algorithm::Csb: return "csb";
        case Algorithm::CsbBounded: return "csb-bounded";
    }
    return "?";
}

Algorithm parse_algorithm(const std::string& s) {
    if (s == "km") return Algorithm::Km;
    if (s == "csb") return Algorithm::Csb;
    if (s == "csb-bounded") return Algorithm::CsbBounded;
    throw std::invalid_argument("unknown algorithm '" + s + "'");
}

namespace {

struct TrialOutcome {
    std::uint64_t queries = 0;
    double seconds = 0;
    bool ok = false;
};

TrialOutcome run_trial(Algorithm alg, const Sample& s, const mpz_class& n) {
    const Fraction expected(s.a, s.b);
    RationalOracle oracle(expected);
    TrialOutcome t;
    auto start = std::chrono::steady_clock::now();
    Fraction got;
    try {
        switch (alg) {
            case Algorithm::Km: got = km_search(oracle, n).result; break;
            case Algorithm::Csb: got = rational_search_unbounded(oracle).result; break;
            case Algorithm::CsbBounded: got = rational_search_bounded(oracle, n).result; break;
        }
        t.ok = got == expected;
    } catch (const std::exception&) {
        t.ok = false;
    }
    t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.queries = oracle.count();
    return t;
}

}  // namespace

std::vector<BenchRecord> run_search_bench(const TrialPlan& plan, const mpz_class& n,
                                          const std::vector<Algorithm>& algorithms, Exec exec) {
    if (plan.trials == 0) throw std::invalid_argument("trials must be > 0");
    const std::vector<Sample> samples = sample_trials(plan, n);
    std::vector<BenchRecord> records;
    for (Algorithm alg : algorithms) {
        std::vector<TrialOutcome> out(samples.size());
        const long count = static_cast<long>(samples.size());
        if (exec == Exec::Serial) {
            for (long i = 0; i < count; ++i) out[i] = run_trial(alg, samples[i], n);
        } else {
#pragma omp parallel for schedule(dynamic, 16)
            for (long i = 0; i < count; ++i) out[i] = run_trial(alg, samples[i], n);
        }
        BenchRecord r;
        r.n = n;
        r.algorithm = algorithm_name(alg);
        r.trials = plan.trials;
        r.seed = plan.seed;
        r.parallel_timing = exec == Exec::Parallel;
        double q = 0, t = 0;
        for (const TrialOutcome& o : out) {
            r.max_queries = std::max(r.max_queries, o.queries);
            q += static_cast<double>(o.queries);
            t += o.seconds;
            if (!o.ok) ++r.failures;
        }
        r.avg_queries = q / static_cast<double>(out.size());
        r.avg_time_s = t / static_cast<double>(out.size());
        records.push_back(std::move(r));
    }
    return records;
}

std::pair<Fraction, Fraction> constant_enclosure(const std::string& name, long bits) {
    if (name == "pi" || name == "e") {
        ConstantOracle o(name == "pi" ? Constant::Pi : Constant::E);
        auto [lo, hi] = o.enclosure(bits);
        return {Fraction::from_mpq(lo), Fraction::from_mpq(hi)};
    }
    unsigned long d;
    if (name == "sqrt2") d = 2;
    else if (name == "sqrt5") d = 5;
    else if (name.rfind("sqrt:", 0) == 0) d = std::stoul(name.substr(5));
    else throw std::invalid_argument("unknown constant '" + name + "'");
    Real lo(bits), hi(bits);
    mpfr_set_ui(lo.get(), d, MPFR_RNDN);
    mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_set_ui(hi.get(), d, MPFR_RNDN);
    mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDU);
    mpq_class ql, qh;
    mpfr_get_q(ql.get_mpq_t(), lo.get());
    mpfr_get_q(qh.get_mpq_t(), hi.get());
    return {Fraction::from_mpq(ql), Fraction::from_mpq(qh)};
}

std::vector<ApproxCell> run_approx_bench(const std::vector<std::string>& constants, unsigned min_exp,
                                         unsigned max_exp, unsigned repeats, Exec exec) {
    if (repeats == 0) throw std::invalid_argument("repeats must be > 0");
    std::vector<ApproxCell> cells;
    for (unsigned e = min_exp; e <= max_exp; ++e)
        for (const std::string& c : constants) {
            ApproxCell cell;
            cell.constant = c;
            cell.delta_exp = e;
            cells.push_back(std::move(cell));
        }
    auto run_cell = [&](ApproxCell& cell) {
        const Fraction delta = decimal_delta(cell.delta_exp);
        double total = 0;
        for (unsigned r = 0; r < repeats; ++r) {
            auto oracle = make_oracle(cell.constant);
            auto start = std::chrono::steady_clock::now();
            ApproxResult res = approximate_unknown(*oracle, delta);
            total += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            cell.result = res.result;
            cell.queries = res.queries;
        }
        cell.avg_time_s = total / repeats;
        auto [lo, hi] = constant_enclosure(cell.constant);
        cell.verified = best_approx_known(lo, hi, delta) == cell.result;
        cell.expected_fraction = reference_approximation(cell.constant, cell.delta_exp);
        cell.expected_queries = reference_query_count(cell.constant, cell.delta_exp);
    };
    const long count = static_cast<long>(cells.size());
    if (exec == Exec::Serial) {
        for (long i = 0; i < count; ++i) run_cell(cells[i]);
    } else {
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < count; ++i) run_cell(cells[i]);
    }
    return cells;
}

std::string format_number(double v, int significant) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant, v);
    return buf;
}

namespace {

std::string record_name(const BenchRecord& r) { return r.failures ? r.algorithm + ":failed" : r.algorithm; }

}  // namespace

void emit_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
    out << "n,algorithm,max_queries,avg_queries,avg_time_s,trials,seed\n";
    for (const BenchRecord& r : records)
        out << r.n.get_str() << ',' << record_name(r) << ',' << r.max_queries << ',' << format_number(r.avg_queries, 6)
            << ',' << format_number(r.avg_time_s, 3) << ',' << r.trials << ',' << r.seed << '\n';
}

void emit_plot_data(const std::vector<BenchRecord>& records, std::ostream& out) {
    out << "log10_n,series,value\n";
    for (const BenchRecord& r : records) {
        // n is a power of ten in bench runs; fall back to the digit count.
        const std::string digits = r.n.get_str();
        const std::size_t log10n = digits.size() - 1;
        out << log10n << ',' << r.algorithm << "_avg," << format_number(r.avg_queries, 6) << '\n';
        out << log10n << ',' << r.algorithm << "_max," << r.max_queries << '\n';
    }
}

void emit_json(const std::vector<BenchRecord>& records, std::ostream& out) {
    nlohmann::json j = nlohmann::json::array();
    for (const BenchRecord& r : records)
        j.push_back({{"n", r.n.get_str()},
                     {"algorithm", r.algorithm},
                     {"max_queries", r.max_queries},
                     {"avg_queries", r.avg_queries},
                     {"avg_time_s", r.avg_time_s},
                     {"trials", r.trials},
                     {"seed", r.seed},
                     {"failures", r.failures},
                     {"parallel_timing", r.parallel_timing},
                     {"rng", kRngName}});
    out << j.dump(2) << '\n';
}

void emit_approx_csv(const std::vector<ApproxCell>& cells, std::ostream& out) {
    out << "constant,delta_exp,fraction,queries,avg_time_s,verified,expected_fraction,expected_queries\n";
    for (const ApproxCell& c : cells)
        out << c.constant << ',' << c.delta_exp << ',' << c.result.str() << ',' << c.queries << ','
            << format_number(c.avg_time_s, 3) << ',' << (c.verified ? "yes" : "no") << ','
            << (c.expected_fraction ? c.expected_fraction->str() : "") << ','
            << (c.expected_queries ? std::to_string(*c.expected_queries) : "") << '\n';
}

void emit_approx_json(const std::vector<ApproxCell>& cells, std::ostream& out) {
    nlohmann::json j = nlohmann::json::array();
    for (const ApproxCell& c : cells) {
        nlohmann::json row = {{"constant", c.constant}, {"delta_exp", c.delta_exp}, {"fraction", c.result.str()},
                              {"queries", c.queries},   {"avg_time_s", c.avg_time_s}, {"verified", c.verified}};
        row["expected_fraction"] = c.expected_fraction ? nlohmann::json(c.expected_fraction->str()) : nlohmann::json();
        row["expected_queries"] = c.expected_queries ? nlohmann::json(*c.expected_queries) : nlohmann::json();
        j.push_back(std::move(row));
    }
    out << j.dump(2) << '\n';
}

}  // namespace sbs
