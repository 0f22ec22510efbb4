#include "sbsearch/oracle.hpp"

#include <mpfr.h>

#include <cmath>

namespace sbs {

Cmp ComparisonOracle::compare(const Fraction& beta) {
    if (beta.is_infinite()) throw std::domain_error("oracle query must be finite");
    return compare(beta.to_mpq());
}

Cmp ComparisonOracle::compare(const mpq_class& beta) {
    ++count_;
    if (sgn(beta) <= 0) return Cmp::Less;  // alpha > 0
    return decide(beta);
}

RationalOracle::RationalOracle(Fraction hidden) : text_(hidden.str()) {
    if (hidden.is_infinite() || hidden.num() == 0) throw std::domain_error("hidden value must be positive and finite");
    hidden_ = hidden.to_mpq();
}

std::string RationalOracle::describe() const { return text_; }

Cmp RationalOracle::decide(const mpq_class& beta) { return sbs::compare(beta, hidden_); }

SqrtOracle::SqrtOracle(unsigned long d) : d_(d) {
    if (d == 0 || mpz_perfect_square_p(d_.get_mpz_t())) throw std::domain_error("sqrt oracle needs a positive non-square");
}

std::string SqrtOracle::describe() const { return "sqrt:" + d_.get_str(); }

Cmp SqrtOracle::decide(const mpq_class& beta) {
    // beta > 0 here: compare num^2 with d * den^2.
    mpz_class lhs = beta.get_num() * beta.get_num();
    mpz_class rhs = d_ * beta.get_den() * beta.get_den();
    int s = cmp(lhs, rhs);
    return s < 0 ? Cmp::Less : (s > 0 ? Cmp::Greater : Cmp::Equal);
}

struct ConstantOracle::Impl {
    mpfr_t lo, hi;
    long bits = 0;

    Impl() {
        mpfr_init2(lo, 64);
        mpfr_init2(hi, 64);
    }
    ~Impl() {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }

    void refine(Constant c, long new_bits) {
        mpfr_set_prec(lo, new_bits);
        mpfr_set_prec(hi, new_bits);
        if (c == Constant::Pi) {
            mpfr_const_pi(lo, MPFR_RNDD);
            mpfr_const_pi(hi, MPFR_RNDU);
        } else {
            mpfr_set_ui(lo, 1, MPFR_RNDN);
            mpfr_set_ui(hi, 1, MPFR_RNDN);
            mpfr_exp(lo, lo, MPFR_RNDD);
            mpfr_exp(hi, hi, MPFR_RNDU);
        }
        bits = new_bits;
    }
};

ConstantOracle::ConstantOracle(Constant c, std::uint64_t digit_budget)
    : c_(c),
      budget_bits_(static_cast<std::uint64_t>(std::ceil(static_cast<double>(digit_budget) * 3.3219280948873623))),
      impl_(std::make_unique<Impl>()) {
    impl_->refine(c_, 128);
}

ConstantOracle::~ConstantOracle() = default;

std::string ConstantOracle::describe() const { return c_ == Constant::Pi ? "pi" : "e"; }

std::pair<mpq_class, mpq_class> ConstantOracle::enclosure(long bits) {
    if (impl_->bits != bits) impl_->refine(c_, bits);
    mpq_class lo, hi;
    mpfr_get_q(lo.get_mpq_t(), impl_->lo);
    mpfr_get_q(hi.get_mpq_t(), impl_->hi);
    return {lo, hi};
}

Cmp ConstantOracle::decide(const mpq_class& beta) {
    for (;;) {
        if (mpfr_cmp_q(impl_->lo, beta.get_mpq_t()) > 0) return Cmp::Less;
        if (mpfr_cmp_q(impl_->hi, beta.get_mpq_t()) < 0) return Cmp::Greater;
        long next = impl_->bits * 2;
        if (static_cast<std::uint64_t>(next) > budget_bits_)
            throw PrecisionExhausted("cannot separate query from " + describe() + " within the digit budget");
        impl_->refine(c_, next);
    }
}

std::unique_ptr<ComparisonOracle> make_oracle(std::string_view name, std::uint64_t digit_budget) {
    std::string s(name);
    if (s == "pi") return std::make_unique<ConstantOracle>(Constant::Pi, digit_budget);
    if (s == "e") return std::make_unique<ConstantOracle>(Constant::E, digit_budget);
    if (s == "sqrt2") return std::make_unique<SqrtOracle>(2);
    if (s == "sqrt5") return std::make_unique<SqrtOracle>(5);
    if (s.rfind("sqrt:", 0) == 0) {
        unsigned long d = std::stoul(s.substr(5));
        return std::make_unique<SqrtOracle>(d);
    }
    return std::make_unique<RationalOracle>(Fraction::parse(s));
}

}  // namespace sbs
