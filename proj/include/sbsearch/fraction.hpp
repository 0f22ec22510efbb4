#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sbs {

// Three-way result. For oracles, compare(beta) reports beta relative to the
// hidden value: Less means beta < alpha.
enum class Cmp { Less, Equal, Greater };

const char* to_string(Cmp c);

// Non-negative reduced rational with arbitrary-precision parts.
// 1/0 is a formal +infinity usable only as a bracket endpoint.
class Fraction {
public:
    Fraction();  // 0/1
    Fraction(long num, long den = 1);
    Fraction(mpz_class num, mpz_class den);

    // Skips the gcd. Caller guarantees gcd(num, den) == 1 (tree nodes do).
    static Fraction from_coprime(mpz_class num, mpz_class den);
    static Fraction infinity() { return from_coprime(1, 0); }
    static Fraction from_mpq(const mpq_class& q);

    // "p/q", "p" or "inf".
    static Fraction parse(std::string_view text);

    const mpz_class& num() const { return num_; }
    const mpz_class& den() const { return den_; }
    bool is_infinite() const { return den_ == 0; }

    mpq_class to_mpq() const;  // throws on infinity
    std::string str() const;

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    mpz_class num_;
    mpz_class den_;
};

Cmp compare(const Fraction& a, const Fraction& b);
Cmp compare(const mpq_class& a, const mpq_class& b);
bool operator<(const Fraction& a, const Fraction& b);

// (a.num + b.num) / (a.den + b.den); requires a < b.
Fraction mediant(const Fraction& left, const Fraction& right);

}  // namespace sbs
