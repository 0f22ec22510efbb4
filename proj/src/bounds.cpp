#include "sbsearch/bounds.hpp"

#include "sbsearch/continued_fraction.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <regex>
#include <stdexcept>

namespace sbs {

unsigned G(std::uint64_t x) {
    if (x < 1) throw std::domain_error("G needs x >= 1");
    return 2 * (static_cast<unsigned>(std::bit_width(x)) - 1) + 1;
}

unsigned G(const mpz_class& x) {
    if (x < 1) throw std::domain_error("G needs x >= 1");
    return 2 * (static_cast<unsigned>(mpz_sizeinbase(x.get_mpz_t(), 2)) - 1) + 1;
}

// ---------------------------------------------------------------- constants

BoundConstant BoundConstant::decimal(std::string_view text) {
    static const std::regex re(R"(\s*(\d+)(?:\.(\d+))?\s*)");
    std::string s(text);
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw std::invalid_argument("not a decimal constant: '" + s + "'");
    std::string frac = m[2].matched ? m[2].str() : "";
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BoundConstant c;
    c.value_ = mpq_class(mpz_class(m[1].str() + frac), scale);
    c.value_.canonicalize();
    if (sgn(c.value_) <= 0) throw std::invalid_argument("constant must be positive");
    c.tag_ = m[1].str() + (frac.empty() ? "" : "." + frac);
    return c;
}

BoundConstant BoundConstant::inverse_log(long k, long u, long v, long d) {
    if (k <= 0 || u < 0 || v < 0 || (v != 0 && d <= 0)) throw std::invalid_argument("bad k/log2(u+v*sqrt(d)) constant");
    BoundConstant c;
    c.decimal_ = false;
    c.k_ = k;
    c.u_ = u;
    c.v_ = v;
    c.d_ = v == 0 ? 0 : d;
    c.tag_ = std::to_string(k) + "/log2(" + std::to_string(u);
    if (v != 0) c.tag_ += "+" + (v == 1 ? std::string() : std::to_string(v)) + "sqrt" + std::to_string(d);
    c.tag_ += ")";
    // Q must exceed 1 for c to be positive and finite.
    if (v == 0 && u <= 1) throw std::invalid_argument("log2 argument must exceed 1");
    // Constants below the lower bound are rendered rounded down, others up.
    c.round_up_ = !(k == 8 && u == 5 && v == 2 && d == 6);
    return c;
}

BoundConstant BoundConstant::parse(std::string_view text) {
    std::string s(text);
    if (s == "four-segment") return four_segment();
    if (s == "three-segment") return three_segment();
    if (s == "two-segment") return two_segment();
    if (s == "one-segment") return one_segment();
    if (s == "lower-bound") return lower_bound();
    static const std::regex re(R"(\s*(\d+)\s*/\s*log2\(\s*(\d+)\s*(?:\+\s*(\d*)\s*sqrt\s*(\d+))?\s*\)\s*)");
    std::smatch m;
    if (std::regex_match(s, m, re)) {
        long v = 0, d = 0;
        if (m[4].matched) {
            v = m[3].str().empty() ? 1 : std::stol(m[3].str());
            d = std::stol(m[4].str());
        }
        return inverse_log(std::stol(m[1].str()), std::stol(m[2].str()), v, d);
    }
    return decimal(s);
}

void BoundConstant::enclose(mpfr_ptr lo, mpfr_ptr hi) const {
    if (decimal_) {
        mpfr_set_q(lo, value_.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi, value_.get_mpq_t(), MPFR_RNDU);
        return;
    }
    Real qlo(mpfr_get_prec(lo)), qhi(mpfr_get_prec(hi));
    mpfr_set_ui(qlo.get(), static_cast<unsigned long>(d_), MPFR_RNDN);
    mpfr_sqrt(qlo.get(), qlo.get(), MPFR_RNDD);
    mpfr_set_ui(qhi.get(), static_cast<unsigned long>(d_), MPFR_RNDN);
    mpfr_sqrt(qhi.get(), qhi.get(), MPFR_RNDU);
    mpfr_mul_ui(qlo.get(), qlo.get(), static_cast<unsigned long>(v_), MPFR_RNDD);
    mpfr_mul_ui(qhi.get(), qhi.get(), static_cast<unsigned long>(v_), MPFR_RNDU);
    mpfr_add_ui(qlo.get(), qlo.get(), static_cast<unsigned long>(u_), MPFR_RNDD);
    mpfr_add_ui(qhi.get(), qhi.get(), static_cast<unsigned long>(u_), MPFR_RNDU);
    mpfr_log2(qlo.get(), qlo.get(), MPFR_RNDD);
    mpfr_log2(qhi.get(), qhi.get(), MPFR_RNDU);
    mpfr_ui_div(lo, static_cast<unsigned long>(k_), qhi.get(), MPFR_RNDD);
    mpfr_ui_div(hi, static_cast<unsigned long>(k_), qlo.get(), MPFR_RNDU);
}

std::string BoundConstant::render(int digits) const {
    if (decimal_) {
        // Exact value: directed rounding of value * 10^digits.
        mpz_class scale, r;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
        mpq_class v = value_ * scale;
        if (round_up_) mpz_cdiv_q(r.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
        else mpz_fdiv_q(r.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
        std::string s = r.get_str();
        if (digits <= 0) return s;
        if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
        return s;
    }
    Real lo, hi;
    enclose(lo.get(), hi.get());
    const Real& src = round_up_ ? hi : lo;
    char* buf = nullptr;
    if (round_up_) mpfr_asprintf(&buf, "%.*RUf", digits, src.get());
    else mpfr_asprintf(&buf, "%.*RDf", digits, src.get());
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

bool BoundConstant::exact_holds(unsigned s, const mpz_class& num, unsigned e) const {
    if (decimal_) {
        // s <= (p/q) log2(num/2^e)  <=>  2^(s q + e p) <= num^p
        if (!value_.get_num().fits_ulong_p() || !value_.get_den().fits_ulong_p())
            throw std::overflow_error("decimal constant too long for exact comparison");
        const unsigned long p = value_.get_num().get_ui(), q = value_.get_den().get_ui();
        mpz_class lhs = 1, rhs;
        mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<mp_bitcnt_t>(s) * q + static_cast<mp_bitcnt_t>(e) * p);
        mpz_pow_ui(rhs.get_mpz_t(), num.get_mpz_t(), p);
        return lhs <= rhs;
    }
    // s <= k log2(num/2^e) / log2 Q  <=>  Q^s 2^(e k) <= num^k, with Q = u + v sqrt d.
    mpz_class U = 1, V = 0;
    for (unsigned i = 0; i < s; ++i) {
        mpz_class nu = U * u_ + V * v_ * d_;
        mpz_class nv = U * v_ + V * u_;
        U = std::move(nu);
        V = std::move(nv);
    }
    const mp_bitcnt_t shift = static_cast<mp_bitcnt_t>(e) * static_cast<mp_bitcnt_t>(k_);
    mpz_class X = U << shift, Y = V << shift, Z;
    mpz_pow_ui(Z.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k_));
    if (Y == 0) return X <= Z;
    if (Z < X) return false;
    mpz_class gap = Z - X;
    return Y * Y * d_ <= gap * gap;
}

// ---------------------------------------------------------------- tuple scan

mpz_class segment_rhs_numerator(const Tuple& xs, ScanMode mode) {
    mpz_class d = mode == ScanMode::BaseCase ? 1 : 2, m = 1;
    for (std::uint64_t x : xs) {
        mpz_class nd = d + m * x;
        m = nd - m;  // d + (x-1) m
        d = std::move(nd);
    }
    return d;
}

namespace {

constexpr mpfr_prec_t kScanPrec = 256;

struct ScanState {
    std::uint64_t tuples = 0;
    std::uint64_t fallbacks = 0;
    std::vector<Tuple> violations;
    Tuple best;
    Real best_ratio{kScanPrec};
    bool has_best = false;
};

// Ratios closer than this are treated as ties.
bool beats(const Real& candidate, const Real& incumbent) {
    Real diff(kScanPrec);
    mpfr_sub(diff.get(), candidate.get(), incumbent.get(), MPFR_RNDN);
    return mpfr_cmp_si_2exp(diff.get(), 1, -200) > 0;
}

class TupleChecker {
public:
    TupleChecker(const BoundConstant& c, ScanMode mode) : c_(c), mode_(mode), e_(mode == ScanMode::BaseCase ? 0 : 1) {
        c.enclose(c_lo_.get(), c_hi_.get());
    }

    void visit(const Tuple& xs, ScanState& st) {
        unsigned s = 0;
        for (std::uint64_t x : xs) s += G(x);
        mpz_class num = segment_rhs_numerator(xs, mode_);

        mpfr_set_z(tmp_.get(), num.get_mpz_t(), MPFR_RNDD);
        mpfr_log2(l_lo_.get(), tmp_.get(), MPFR_RNDD);
        mpfr_sub_ui(l_lo_.get(), l_lo_.get(), e_, MPFR_RNDD);
        mpfr_set_z(tmp_.get(), num.get_mpz_t(), MPFR_RNDU);
        mpfr_log2(l_hi_.get(), tmp_.get(), MPFR_RNDU);
        mpfr_sub_ui(l_hi_.get(), l_hi_.get(), e_, MPFR_RNDU);
        // The right-hand side always exceeds 1, so both logs are positive.
        mpfr_mul(r_lo_.get(), c_lo_.get(), l_lo_.get(), MPFR_RNDD);
        mpfr_mul(r_hi_.get(), c_hi_.get(), l_hi_.get(), MPFR_RNDU);

        bool holds;
        if (mpfr_cmp_ui(r_lo_.get(), s) > 0) {
            holds = true;
        } else if (mpfr_cmp_ui(r_hi_.get(), s) < 0) {
            holds = false;
        } else {
            ++st.fallbacks;
            holds = c_.exact_holds(s, num, e_);
        }
        ++st.tuples;
        if (!holds) st.violations.push_back(xs);

        mpfr_ui_div(ratio_.get(), s, l_lo_.get(), MPFR_RNDN);
        if (!st.has_best || beats(ratio_, st.best_ratio)) {
            st.best_ratio = ratio_;
            st.best = xs;
            st.has_best = true;
        }
    }

private:
    const BoundConstant& c_;
    ScanMode mode_;
    unsigned e_;
    Real c_lo_{kScanPrec}, c_hi_{kScanPrec}, tmp_{kScanPrec}, l_lo_{kScanPrec}, l_hi_{kScanPrec};
    Real r_lo_{kScanPrec}, r_hi_{kScanPrec}, ratio_{kScanPrec};
};

void enumerate(Tuple& xs, unsigned pos, std::uint64_t budget, TupleChecker& chk, ScanState& st) {
    if (pos == xs.size()) {
        chk.visit(xs, st);
        return;
    }
    for (std::uint64_t x = 1; x <= budget; ++x) {
        xs[pos] = x;
        enumerate(xs, pos + 1, budget / x, chk, st);
    }
}

void merge_into(ScanState& acc, ScanState& part) {
    acc.tuples += part.tuples;
    acc.fallbacks += part.fallbacks;
    for (auto& v : part.violations) acc.violations.push_back(std::move(v));
    if (part.has_best && (!acc.has_best || beats(part.best_ratio, acc.best_ratio))) {
        acc.best_ratio = part.best_ratio;
        acc.best = part.best;
        acc.has_best = true;
    }
}

}  // namespace

TupleScanReport verify_tuple_inequality(unsigned num_vars, std::uint64_t top, const BoundConstant& c, ScanMode mode,
                                        Exec exec) {
    if (num_vars < 1 || num_vars > 4) throw std::invalid_argument("num_vars must be in 1..4");
    if (top < 1) throw std::invalid_argument("top must be >= 1");

    ScanState total;
    if (exec == Exec::Serial) {
        TupleChecker chk(c, mode);
        Tuple xs(num_vars);
        enumerate(xs, 0, top, chk, total);
    } else {
        // Blocks over x1: singletons first (they carry most tuples), then even ranges.
        std::vector<std::pair<std::uint64_t, std::uint64_t>> blocks;
        const std::uint64_t head = std::min<std::uint64_t>(top, 1024);
        for (std::uint64_t x = 1; x <= head; ++x) blocks.emplace_back(x, x);
        if (top > head) {
            const std::uint64_t rest = top - head;
            const std::uint64_t step = (rest + 3071) / 3072;
            for (std::uint64_t lo = head + 1; lo <= top; lo += step) blocks.emplace_back(lo, std::min(top, lo + step - 1));
        }
        std::vector<ScanState> parts(blocks.size());
#pragma omp parallel
        {
            TupleChecker chk(c, mode);
            Tuple xs(num_vars);
#pragma omp for schedule(dynamic, 1)
            for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
                for (std::uint64_t x1 = blocks[bi].first; x1 <= blocks[bi].second; ++x1) {
                    xs[0] = x1;
                    enumerate(xs, 1, top / x1, chk, parts[bi]);
                }
            }
        }
        for (auto& p : parts) merge_into(total, p);
    }

    TupleScanReport r;
    r.num_vars = num_vars;
    r.top = top;
    r.constant = c.tag();
    r.mode = mode;
    r.tuples = total.tuples;
    r.exact_fallbacks = total.fallbacks;
    r.violations = std::move(total.violations);
    r.argmax_tuple = total.best;
    r.max_ratio = total.best_ratio.str(30);
    r.max_ratio_approx = total.best_ratio.to_double();
    return r;
}

mpz_class threshold(const BoundConstant& c, unsigned sum_terms, ScanMode mode) {
    if (sum_terms < 1 || sum_terms > 4) throw std::invalid_argument("sum_terms must be in 1..4");
    Real lo, hi;
    c.enclose(lo.get(), hi.get());
    if (mpfr_cmp_ui(lo.get(), 2) <= 0) throw std::domain_error("threshold needs c > 2");

    // Floating estimate of 2^(E/(c-2)).
    Real ex, est;
    mpfr_sub_ui(ex.get(), lo.get(), 2, MPFR_RNDN);
    Real top_e;
    mpfr_set_ui(top_e.get(), sum_terms, MPFR_RNDN);
    if (mode == ScanMode::InductiveStep) mpfr_add(top_e.get(), top_e.get(), lo.get(), MPFR_RNDN);
    mpfr_div(ex.get(), top_e.get(), ex.get(), MPFR_RNDN);
    mpfr_ui_pow(est.get(), 2, ex.get(), MPFR_RNDN);
    mpfr_ceil(est.get(), est.get());
    mpz_class t;
    mpfr_get_z(t.get_mpz_t(), est.get(), MPFR_RNDN);
    if (!c.is_decimal()) return t;

    // Exact: smallest T with T^(p-2q) >= 2^(terms q [+ p]).
    const mpz_class p = c.value().get_num(), q = c.value().get_den();
    const unsigned long r = mpz_class(p - 2 * q).get_ui();
    mpz_class e = sum_terms * q;
    if (mode == ScanMode::InductiveStep) e += p;
    mpz_class rhs = 1;
    rhs <<= e.get_ui();
    auto ok = [&](const mpz_class& T) {
        mpz_class v;
        mpz_pow_ui(v.get_mpz_t(), T.get_mpz_t(), r);
        return v >= rhs;
    };
    if (t < 1) t = 1;
    while (!ok(t)) ++t;
    while (t > 1 && ok(t - 1)) --t;
    return t;
}

// ---------------------------------------------------------------- polynomials

Polynomial Polynomial::constant(unsigned nvars, const mpq_class& c) {
    Polynomial p(nvars);
    p.add_term(std::vector<unsigned>(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(unsigned nvars, unsigned i) {
    Polynomial p(nvars);
    std::vector<unsigned> e(nvars, 0);
    e.at(i) = 1;
    p.add_term(e, 1);
    return p;
}

void Polynomial::add_term(const std::vector<unsigned>& e, const mpq_class& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(std::max(n_, o.n_));
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<unsigned> e(r.n_, 0);
            for (std::size_t i = 0; i < e1.size(); ++i) e[i] += e1[i];
            for (std::size_t i = 0; i < e2.size(); ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

mpq_class Polynomial::evaluate(const Tuple& xs) const {
    mpq_class sum = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= xs.at(i);
        sum += t;
    }
    return sum;
}

std::string Polynomial::str() const {
    std::vector<std::pair<std::vector<unsigned>, mpq_class>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        unsigned da = 0, db = 0;
        for (unsigned x : a.first) da += x;
        for (unsigned x : b.first) db += x;
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::string out;
    for (const auto& [e, c] : v) {
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) mono += (mono.empty() ? "" : "*") + std::string("x") + std::to_string(i + 1);
        std::string term;
        if (mono.empty()) term = c.get_str();
        else if (c == 1) term = mono;
        else term = c.get_str() + "*" + mono;
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out.empty() ? "0" : out;
}

Polynomial segment_polynomial(unsigned num_vars, ScanMode mode) {
    Polynomial d = Polynomial::constant(num_vars, 1);
    Polynomial m = Polynomial::constant(num_vars, mode == ScanMode::BaseCase ? mpq_class(1) : mpq_class(1, 2));
    for (unsigned i = 0; i < num_vars; ++i) {
        Polynomial x = Polynomial::variable(num_vars, i);
        Polynomial nd = d + x * m;
        m = nd - m;
        d = std::move(nd);
    }
    return d;
}

// ---------------------------------------------------------------- growth rates

GrowthRates growth_rates(std::uint64_t a, std::uint64_t b) {
    if (a < 1 || b < 1) throw std::domain_error("growth_rates needs a, b >= 1");
    const mpz_class A = a, B = b;
    Real root;
    mpz_class disc = 4 * A * B + A * A * B * B;
    mpfr_set_z(root.get(), disc.get_mpz_t(), MPFR_RNDN);
    mpfr_sqrt(root.get(), root.get(), MPFR_RNDN);

    auto one = [&](const mpz_class& x, const mpz_class& y) {
        // (2 - 2y/x + xy + root) / (2 (1 + y - y/x))
        mpq_class num = 2 - mpq_class(2 * y, x) + mpq_class(x * y);
        mpq_class den = 2 * (1 + mpq_class(y) - mpq_class(y, x));
        num.canonicalize();
        den.canonicalize();
        Real r;
        mpfr_add_q(r.get(), root.get(), num.get_mpq_t(), MPFR_RNDN);
        mpfr_div_q(r.get(), r.get(), den.get_mpq_t(), MPFR_RNDN);
        return r;
    };
    return {one(A, B), one(B, A)};
}

Real comparisons_coefficient(std::uint64_t a, std::uint64_t b) {
    GrowthRates g = growth_rates(a, b);
    Real prod, r;
    mpfr_mul(prod.get(), g.phi_a.get(), g.phi_b.get(), MPFR_RNDN);
    mpfr_log2(prod.get(), prod.get(), MPFR_RNDN);
    mpfr_ui_div(r.get(), G(a) + G(b), prod.get(), MPFR_RNDN);
    return r;
}

namespace {

double coefficient_estimate(std::uint64_t a, std::uint64_t b) {
    const double A = static_cast<double>(a), B = static_cast<double>(b);
    const double root = std::sqrt(4 * A * B + A * A * B * B);
    const double pa = (2 - 2 * B / A + A * B + root) / (2 * (1 + B - B / A));
    const double pb = (2 - 2 * A / B + A * B + root) / (2 * (1 + A - A / B));
    return (G(a) + G(b)) / std::log2(pa * pb);
}

struct RowBest {
    std::uint64_t b = 0;
    double estimate = -1;
    Real value;
};

}  // namespace

WorstPair worst_pair(std::uint64_t max_ab, Exec exec) {
    if (max_ab < 1) throw std::invalid_argument("max must be >= 1");
    // Double estimates prune; any pair within 1e-9 of the running best is
    // settled at full precision.
    std::vector<RowBest> rows(max_ab + 1);
    auto scan_row = [&](std::uint64_t a) {
        RowBest& row = rows[a];
        for (std::uint64_t b = 1; b <= max_ab; ++b) {
            double est = coefficient_estimate(a, b);
            if (row.b != 0 && est < row.estimate - 1e-9) continue;
            Real v = comparisons_coefficient(a, b);
            if (row.b == 0 || beats(v, row.value)) {
                row.b = b;
                row.value = v;
                row.estimate = est;
            }
        }
    };
    if (exec == Exec::Serial) {
        for (std::uint64_t a = 1; a <= max_ab; ++a) scan_row(a);
    } else {
#pragma omp parallel for schedule(dynamic, 8)
        for (std::uint64_t a = 1; a <= max_ab; ++a) scan_row(a);
    }
    WorstPair best;
    for (std::uint64_t a = 1; a <= max_ab; ++a) {
        // Ascending a, so a tie goes to the larger a.
        Real diff;
        if (best.a != 0) mpfr_sub(diff.get(), best.coefficient.get(), rows[a].value.get(), MPFR_RNDN);
        if (best.a == 0 || mpfr_cmp_si_2exp(diff.get(), 1, -200) <= 0) {
            best.a = a;
            best.b = rows[a].b;
            best.coefficient = rows[a].value;
        }
    }
    return best;
}

Fraction worst_case_fraction(const mpz_class& a, const mpz_class& b, unsigned k) {
    if (a < 1 || b < 1 || k < 1) throw std::domain_error("worst_case_fraction needs a, b, k >= 1");
    std::vector<Run> runs;
    for (unsigned i = 0; i < k; ++i) {
        runs.push_back({Dir::L, a});
        runs.push_back({Dir::R, b});
    }
    return sb_path_to_fraction(SBPath(std::move(runs)));
}

}  // namespace sbs
