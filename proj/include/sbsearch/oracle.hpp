#pragma once

#include "sbsearch/fraction.hpp"

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sbs {

// Raised when a certified enclosure cannot separate a query within budget.
struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Answers sign(beta - alpha) for a hidden alpha > 0 and counts every call.
// Negative betas are legal (shifted probes produce them) and answer Less.
class ComparisonOracle {
public:
    virtual ~ComparisonOracle() = default;

    Cmp compare(const Fraction& beta);
    Cmp compare(const mpq_class& beta);

    std::uint64_t count() const { return count_; }
    void reset_count() { count_ = 0; }

    virtual std::string describe() const = 0;

protected:
    virtual Cmp decide(const mpq_class& beta) = 0;

private:
    std::uint64_t count_ = 0;
};

class RationalOracle final : public ComparisonOracle {
public:
    explicit RationalOracle(Fraction hidden);
    std::string describe() const override;

protected:
    Cmp decide(const mpq_class& beta) override;

private:
    mpq_class hidden_;
    std::string text_;
};

// sqrt(d) for a positive non-square d.
class SqrtOracle final : public ComparisonOracle {
public:
    explicit SqrtOracle(unsigned long d);
    std::string describe() const override;

protected:
    Cmp decide(const mpq_class& beta) override;

private:
    mpz_class d_;
};

enum class Constant { Pi, E };

// pi or e through a directed-rounding MPFR enclosure that is refined
// (precision doubled) until beta falls strictly outside it.
class ConstantOracle final : public ComparisonOracle {
public:
    explicit ConstantOracle(Constant c, std::uint64_t digit_budget = 10000);
    ~ConstantOracle() override;
    ConstantOracle(const ConstantOracle&) = delete;
    ConstantOracle& operator=(const ConstantOracle&) = delete;

    std::string describe() const override;
    // Current enclosure as exact rationals.
    std::pair<mpq_class, mpq_class> enclosure(long bits);

protected:
    Cmp decide(const mpq_class& beta) override;

private:
    struct Impl;
    Constant c_;
    std::uint64_t budget_bits_;
    std::unique_ptr<Impl> impl_;
};

// "a/b", "sqrt:d", "pi", "e" (also "sqrt2", "sqrt5").
std::unique_ptr<ComparisonOracle> make_oracle(std::string_view name, std::uint64_t digit_budget = 10000);

}  // namespace sbs
