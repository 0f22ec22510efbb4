#include "sbsearch/fraction.hpp"

#include <cassert>
#include <stdexcept>

namespace sbs {

const char* to_string(Cmp c) {
    switch (c) {
        case Cmp::Less: return "Less";
        case Cmp::Equal: return "Equal";
        case Cmp::Greater: return "Greater";
    }
    return "?";
}

Fraction::Fraction() : num_(0), den_(1) {}

Fraction::Fraction(long num, long den) : Fraction(mpz_class(num), mpz_class(den)) {}

Fraction::Fraction(mpz_class num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {
    if (sgn(num_) < 0 || sgn(den_) < 0) throw std::domain_error("negative fraction part");
    if (num_ == 0 && den_ == 0) throw std::domain_error("0/0 is not a fraction");
    if (den_ == 0) {
        num_ = 1;
        return;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    mpz_class g = gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Fraction Fraction::from_coprime(mpz_class num, mpz_class den) {
    Fraction f;
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    assert(gcd(f.num_, f.den_) == 1);
    return f;
}

Fraction Fraction::from_mpq(const mpq_class& q) {
    if (sgn(q) < 0) throw std::domain_error("negative rational");
    return from_coprime(q.get_num(), q.get_den());
}

Fraction Fraction::parse(std::string_view text) {
    std::string s(text);
    if (s == "inf" || s == "1/0") return infinity();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Fraction(mpz_class(s), mpz_class(1));
        return Fraction(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a fraction: '" + s + "'");
    }
}

mpq_class Fraction::to_mpq() const {
    if (is_infinite()) throw std::domain_error("infinity has no rational value");
    mpq_class q;
    mpz_set(q.get_num_mpz_t(), num_.get_mpz_t());
    mpz_set(q.get_den_mpz_t(), den_.get_mpz_t());
    return q;
}

std::string Fraction::str() const {
    if (is_infinite()) return "inf";
    return num_.get_str() + "/" + den_.get_str();
}

Cmp compare(const Fraction& a, const Fraction& b) {
    if (a.is_infinite() && b.is_infinite()) throw std::domain_error("cannot order infinity against itself");
    if (a.is_infinite()) return Cmp::Greater;
    if (b.is_infinite()) return Cmp::Less;
    int s = cmp(a.num() * b.den(), b.num() * a.den());
    return s < 0 ? Cmp::Less : (s > 0 ? Cmp::Greater : Cmp::Equal);
}

Cmp compare(const mpq_class& a, const mpq_class& b) {
    int s = cmp(a, b);
    return s < 0 ? Cmp::Less : (s > 0 ? Cmp::Greater : Cmp::Equal);
}

bool operator<(const Fraction& a, const Fraction& b) { return compare(a, b) == Cmp::Less; }

Fraction mediant(const Fraction& left, const Fraction& right) {
    if (compare(left, right) != Cmp::Less) throw std::domain_error("mediant needs left < right");
    return Fraction(left.num() + right.num(), left.den() + right.den());
}

}  // namespace sbs
