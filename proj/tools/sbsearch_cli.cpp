// Command-line front end: searches, approximations, bound scans, benchmarks.
#include "sbsearch/approx.hpp"
#include "sbsearch/bench.hpp"
#include "sbsearch/bounds.hpp"
#include "sbsearch/km.hpp"
#include "sbsearch/search.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

using namespace sbs;

namespace {

struct Globals {
    std::uint64_t seed = 1;
    std::uint64_t trials = 1000;
    unsigned max_exp = 25;
    std::string out;
    std::string format = "csv";
    std::uint64_t digits = 10000;
    bool serial = false;
};

Exec exec_of(const Globals& g) { return g.serial ? Exec::Serial : Exec::Parallel; }

// Writes to --out when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw std::runtime_error("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

Fraction parse_delta(const std::string& s) {
    if (s.rfind("1e-", 0) == 0) return decimal_delta(static_cast<unsigned>(std::stoul(s.substr(3))));
    return Fraction::parse(s);
}

mpz_class pow10(unsigned e) {
    mpz_class n;
    mpz_ui_pow_ui(n.get_mpz_t(), 10, e);
    return n;
}

double log2_mpz(const mpz_class& n) {
    long exp = 0;
    double m = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return std::log2(m) + static_cast<double>(exp);
}

int cmd_search(const std::string& hidden, const std::string& bound, bool trace) {
    Fraction h = Fraction::parse(hidden);
    // Outside (0,1) the unbounded descent never terminates.
    if (h.is_infinite() || !(h < Fraction(1, 1))) throw std::invalid_argument("hidden value must lie in (0,1)");
    RationalOracle oracle(h);
    SearchResult r = bound.empty() ? rational_search_unbounded(oracle)
                                   : rational_search_bounded(oracle, mpz_class(bound));
    std::cout << "result " << r.result.str() << "\nqueries " << r.trace.total_queries << '\n';
    if (trace) {
        std::cout << "segment,x,d,m,queries\n";
        for (std::size_t i = 0; i < r.trace.segments.size(); ++i) {
            const Segment& s = r.trace.segments[i];
            std::cout << i + 1 << ',' << s.x.get_str() << ',' << s.d.get_str() << ',' << s.m.get_str() << ','
                      << s.queries << '\n';
        }
    }
    return r.result == h ? 0 : 1;
}

int cmd_km(const std::string& hidden, const std::string& bound) {
    Fraction h = Fraction::parse(hidden);
    RationalOracle oracle(h);
    KmResult r = km_search(oracle, mpz_class(bound));
    std::cout << "result " << r.result.str() << "\nqueries " << r.queries << '\n';
    if (!r.confirmed) std::cout << "warning: hidden value is not the unique fraction of its cell\n";
    return r.result == h ? 0 : 1;
}

int cmd_approx(const Globals& g, const std::string& target, const std::string& delta_text, bool verify) {
    Fraction delta = parse_delta(delta_text);
    auto oracle = make_oracle(target, g.digits);
    auto start = std::chrono::steady_clock::now();
    ApproxResult r = approximate_unknown(*oracle, delta);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "fraction " << r.result.str() << "\nqueries " << r.queries << "\nelapsed_s "
              << format_number(secs, 3) << '\n';
    if (!verify) return 0;
    std::pair<Fraction, Fraction> enc;
    if (target == "pi" || target == "e" || target.rfind("sqrt", 0) == 0) {
        std::string name = target == "sqrt:2" ? "sqrt2" : (target == "sqrt:5" ? "sqrt5" : target);
        enc = constant_enclosure(name);
    } else {
        Fraction v = Fraction::parse(target);
        enc = {v, v};
    }
    Fraction known = best_approx_known(enc.first, enc.second, delta);
    bool ok = known == r.result;
    std::cout << "verify " << (ok ? "ok" : "MISMATCH known=" + known.str()) << '\n';
    return ok ? 0 : 1;
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int cmd_bench(const Globals& g, const std::string& algs, unsigned min_exp, const std::string& plot) {
    std::vector<Algorithm> algorithms;
    for (const std::string& a : split(algs)) algorithms.push_back(parse_algorithm(a));
    TrialPlan plan{g.trials, g.seed};
    std::vector<BenchRecord> all;
    bool ok = true;
    for (unsigned e = min_exp; e <= g.max_exp; ++e) {
        mpz_class n = pow10(e);
        for (BenchRecord& r : run_search_bench(plan, n, algorithms, exec_of(g))) {
            const double l = log2_mpz(n);
            if (r.failures) ok = false;
            if ((r.algorithm == "csb" || r.algorithm == "csb-bounded") && r.max_queries > 2.5849 * l + 2) ok = false;
            // One confirming query on top of the grid bisection.
            if (r.algorithm == "km" && r.max_queries > static_cast<std::uint64_t>(std::ceil(2 * l)) + 1) ok = false;
            all.push_back(std::move(r));
        }
        std::cerr << "n=10^" << e << " done\n";
    }
    Sink sink(g.out);
    if (g.format == "json") emit_json(all, sink.stream());
    else emit_csv(all, sink.stream());
    if (!plot.empty()) {
        Sink p(plot);
        emit_plot_data(all, p.stream());
    }
    if (g.serial) std::cerr << "timing: serial\n";
    else std::cerr << "timing: trials ran in parallel, per-trial times may overlap\n";
    return ok ? 0 : 1;
}

int cmd_approx_bench(const Globals& g, const std::string& constants, unsigned min_exp, unsigned max_exp,
                     unsigned repeats) {
    auto cells = run_approx_bench(split(constants), min_exp, max_exp, repeats, exec_of(g));
    Sink sink(g.out);
    if (g.format == "json") emit_approx_json(cells, sink.stream());
    else emit_approx_csv(cells, sink.stream());
    bool ok = true;
    unsigned query_match = 0, query_cells = 0;
    for (const ApproxCell& c : cells) {
        if (!c.verified) ok = false;
        if (c.expected_fraction && !(*c.expected_fraction == c.result)) ok = false;
        if (c.expected_queries) {
            ++query_cells;
            if (*c.expected_queries == c.queries) ++query_match;
        }
    }
    std::cerr << "fractions " << (ok ? "all correct" : "MISMATCH") << "; reference query counts matched " << query_match
              << "/" << query_cells << '\n';
    return ok ? 0 : 1;
}

int cmd_verify_bounds(const Globals& g, unsigned vars, std::uint64_t top, const std::string& constant,
                      const std::string& mode_text, const std::string& violations_csv) {
    ScanMode mode = mode_text == "step" ? ScanMode::InductiveStep : ScanMode::BaseCase;
    if (mode_text != "step" && mode_text != "base") throw std::invalid_argument("--mode must be base or step");
    BoundConstant c = BoundConstant::parse(constant);
    if (top == 0) {
        top = threshold(c, vars, mode).get_ui();
        std::cout << "top (threshold) " << top << '\n';
    }
    auto t0 = std::chrono::steady_clock::now();
    TupleScanReport r = verify_tuple_inequality(vars, top, c, mode, exec_of(g));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    auto tuple_str = [](const Tuple& t) {
        std::string s = "(";
        for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
        return s + ")";
    };
    std::cout << "vars " << r.num_vars << "\ntop " << r.top << "\nconstant " << r.constant << " ~ " << c.render(6)
              << "\nmode " << mode_text << "\ntuples " << r.tuples << "\nexact_fallbacks " << r.exact_fallbacks
              << "\nviolations " << r.violations.size() << "\nargmax " << tuple_str(r.argmax_tuple) << "\nmax_ratio "
              << r.max_ratio << "\nelapsed_s " << format_number(secs, 3) << '\n';
    if (!violations_csv.empty()) {
        Sink s(violations_csv);
        for (unsigned i = 0; i < vars; ++i) s.stream() << (i ? "," : "") << "x" << i + 1;
        s.stream() << '\n';
        for (const Tuple& t : r.violations) {
            for (std::size_t i = 0; i < t.size(); ++i) s.stream() << (i ? "," : "") << t[i];
            s.stream() << '\n';
        }
    }
    return r.violations.empty() ? 0 : 1;
}

int cmd_worst_pair(const Globals& g, std::uint64_t max_ab) {
    WorstPair w = worst_pair(max_ab, exec_of(g));
    std::cout << "a " << w.a << "\nb " << w.b << "\ncoefficient " << w.coefficient.str(20) << '\n';
    return 0;
}

int cmd_worst_case(unsigned long a, unsigned long b, unsigned k, bool run) {
    Fraction f = worst_case_fraction(a, b, k);
    std::cout << "fraction " << f.str() << '\n';
    if (!run) return 0;
    RationalOracle oracle(f);
    SearchResult r = rational_search_unbounded(oracle);
    double ratio = static_cast<double>(r.trace.total_queries) / log2_mpz(f.den());
    std::cout << "queries " << r.trace.total_queries << "\nratio " << format_number(ratio, 8) << '\n';
    return r.result == f ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rational search and approximation with comparison queries"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key = value file presetting any flag");
    Globals g;
    app.add_option("--seed", g.seed, "RNG seed (mt19937_64)");
    app.add_option("--trials", g.trials, "trials per n")->check(CLI::PositiveNumber);
    app.add_option("--max-exp", g.max_exp, "largest n = 10^e for bench");
    app.add_option("--out", g.out, "output path (stdout when omitted)");
    app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--digits", g.digits, "digit budget for pi/e oracles");
    app.add_flag("--serial", g.serial, "run kernels without OpenMP");

    std::string hidden, bound, target, delta = "1e-5", algs = "km,csb", plot, constant = "2.5849", mode = "base",
                                        viol, constants = "pi,e,sqrt2,sqrt5";
    bool trace = false, verify = false, run = false;
    unsigned min_exp = 1, approx_max = 15, repeats = 1, vars = 2, k = 10;
    std::uint64_t top = 0, max_ab = 1000;
    unsigned long a = 8, b = 1;

    auto* s_search = app.add_subcommand("search", "identify a hidden rational with the compressed tree search");
    s_search->add_option("--hidden", hidden, "hidden a/b in (0,1)")->required();
    s_search->add_option("--bound", bound, "denominator bound n (bounded variant)");
    s_search->add_flag("--trace", trace, "print per-segment trace");

    auto* s_km = app.add_subcommand("km", "identify a hidden rational with the grid bisection baseline");
    s_km->add_option("--hidden", hidden)->required();
    s_km->add_option("--bound", bound, "denominator bound n")->required();

    auto* s_approx = app.add_subcommand("approx", "best rational approximation of an unknown real");
    s_approx->add_option("--target", target, "pi, e, sqrt:d or a/b")->required();
    s_approx->add_option("--delta", delta, "1e-K or p/q");
    s_approx->add_flag("--verify", verify, "cross-check with the known-value algorithm");

    auto* s_bench = app.add_subcommand("bench", "random-trial query statistics for n = 10^1..10^max-exp");
    s_bench->add_option("--algorithms", algs, "comma list of km, csb, csb-bounded");
    s_bench->add_option("--min-exp", min_exp);
    s_bench->add_option("--plot", plot, "also write plot data (log10_n,series,value)");

    auto* s_abench = app.add_subcommand("approx-bench", "approximation table for the four constants");
    s_abench->add_option("--constants", constants);
    s_abench->add_option("--min-exp", min_exp);
    s_abench->add_option("--delta-max-exp", approx_max);
    s_abench->add_option("--repeats", repeats);

    auto* s_vb = app.add_subcommand("verify-bounds", "exhaustive tuple scan of the segment inequality");
    s_vb->add_option("--vars", vars)->check(CLI::Range(1, 4));
    s_vb->add_option("--top", top, "product bound (default: threshold for the constant)");
    s_vb->add_option("--constant", constant, "decimal, k/log2(Q) or preset name");
    s_vb->add_option("--mode", mode, "base or step");
    s_vb->add_option("--violations-csv", viol);

    auto* s_wp = app.add_subcommand("worst-pair", "scan (a,b) for the largest lower-bound coefficient");
    s_wp->add_option("--max", max_ab);

    auto* s_wc = app.add_subcommand("worst-case", "fraction of the path (L^a R^b)^k");
    s_wc->add_option("--a", a);
    s_wc->add_option("--b", b);
    s_wc->add_option("--k", k);
    s_wc->add_flag("--run-search", run);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*s_search) return cmd_search(hidden, bound, trace);
        if (*s_km) return cmd_km(hidden, bound);
        if (*s_approx) return cmd_approx(g, target, delta, verify);
        if (*s_bench) return cmd_bench(g, algs, min_exp, plot);
        if (*s_abench) return cmd_approx_bench(g, constants, min_exp, approx_max, repeats);
        if (*s_vb) return cmd_verify_bounds(g, vars, top, constant, mode, viol);
        if (*s_wp) return cmd_worst_pair(g, max_ab);
        if (*s_wc) return cmd_worst_case(a, b, k, run);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
