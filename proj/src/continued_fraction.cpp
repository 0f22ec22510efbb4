#include "sbsearch/continued_fraction.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace sbs {

ContinuedFraction to_continued_fraction(const Fraction& f) {
    if (f.is_infinite()) throw std::domain_error("infinity has no continued fraction");
    ContinuedFraction cf;
    mpz_class a = f.num(), b = f.den(), q, r;
    while (b != 0) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        cf.terms.push_back(q);
        a = b;
        b = r;
    }
    return cf;
}

Fraction ContinuedFraction::evaluate() const {
    if (terms.empty()) throw std::domain_error("empty continued fraction");
    // Convergent recurrence h_k = a_k h_{k-1} + h_{k-2}.
    mpz_class h_prev = 1, h = terms[0], k_prev = 0, k = 1;
    for (size_t i = 1; i < terms.size(); ++i) {
        mpz_class h_next = terms[i] * h + h_prev;
        mpz_class k_next = terms[i] * k + k_prev;
        h_prev = std::move(h);
        h = std::move(h_next);
        k_prev = std::move(k);
        k = std::move(k_next);
    }
    return Fraction::from_coprime(h, k);
}

std::string ContinuedFraction::str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i == 1) os << ';';
        else if (i > 1) os << ',';
        os << terms[i].get_str();
    }
    os << ']';
    return os.str();
}

ContinuedFraction ContinuedFraction::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() < 3 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("continued fraction must look like [a0;a1,...]");
    s = s.substr(1, s.size() - 2);
    ContinuedFraction cf;
    auto semi = s.find(';');
    try {
        cf.terms.emplace_back(s.substr(0, semi));
        if (semi != std::string::npos) {
            std::string rest = s.substr(semi + 1);
            size_t start = 0;
            while (start <= rest.size()) {
                size_t comma = rest.find(',', start);
                cf.terms.emplace_back(rest.substr(start, comma - start));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        }
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad continued fraction term in '" + std::string(text) + "'");
    }
    if (sgn(cf.terms[0]) < 0) throw std::invalid_argument("a0 must be >= 0");
    for (size_t i = 1; i < cf.terms.size(); ++i)
        if (cf.terms[i] < 1) throw std::invalid_argument("terms after a0 must be >= 1");
    if (cf.terms.size() > 1 && cf.terms.back() < 2)
        throw std::invalid_argument("non-canonical continued fraction (last term 1)");
    return cf;
}

SBPath::SBPath(std::vector<Run> runs) : runs_(std::move(runs)) {
    for (size_t i = 0; i < runs_.size(); ++i) {
        if (runs_[i].exp < 1) throw std::invalid_argument("path exponent must be >= 1");
        if (i > 0 && runs_[i].dir == runs_[i - 1].dir) throw std::invalid_argument("path runs must alternate");
    }
}

std::string SBPath::str() const {
    std::string out;
    for (const Run& r : runs_) {
        if (!out.empty()) out += ' ';
        out += (r.dir == Dir::L ? "L^" : "R^");
        out += r.exp.get_str();
    }
    return out;
}

SBPath SBPath::parse(std::string_view text) {
    std::vector<Run> runs;
    size_t i = 0;
    auto push = [&](Dir d, const mpz_class& e) {
        if (!runs.empty() && runs.back().dir == d) runs.back().exp += e;
        else runs.push_back({d, e});
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c != 'L' && c != 'R') throw std::invalid_argument("unexpected character in path: '" + std::string(1, c) + "'");
        Dir d = c == 'L' ? Dir::L : Dir::R;
        ++i;
        if (i < text.size() && text[i] == '^') {
            size_t j = ++i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) throw std::invalid_argument("missing exponent after '^'");
            mpz_class e(std::string(text.substr(i, j - i)));
            if (e < 1) throw std::invalid_argument("path exponent must be >= 1");
            push(d, e);
            i = j;
        } else {
            push(d, 1);
        }
    }
    return SBPath(std::move(runs));
}

SBPath cf_to_sb_path(const ContinuedFraction& cf) {
    if (cf.terms.empty() || cf.terms[0] != 0) throw std::domain_error("path codec needs a0 = 0");
    if (cf.terms.size() < 2) throw std::domain_error("0 has no path");
    std::vector<Run> runs;
    Dir d = Dir::L;
    for (size_t i = 1; i < cf.terms.size(); ++i, d = flip(d)) {
        mpz_class e = cf.terms[i];
        if (i + 1 == cf.terms.size()) e -= 1;
        if (e > 0) runs.push_back({d, e});
    }
    return SBPath(std::move(runs));
}

Fraction sb_path_to_fraction(const SBPath& path) {
    // Bracket (lo, hi); the current node is their mediant.
    mpz_class lo_n = 0, lo_d = 1, hi_n = 1, hi_d = 0;
    for (const Run& r : path.runs()) {
        if (r.dir == Dir::L) {
            hi_n += r.exp * lo_n;
            hi_d += r.exp * lo_d;
        } else {
            lo_n += r.exp * hi_n;
            lo_d += r.exp * hi_d;
        }
    }
    return Fraction::from_coprime(lo_n + hi_n, lo_d + hi_d);
}

SBPath fraction_to_sb_path(const Fraction& f) {
    if (f.is_infinite() || f.num() == 0 || f.num() >= f.den())
        throw std::domain_error("fraction_to_sb_path needs a value in (0,1)");
    return cf_to_sb_path(to_continued_fraction(f));
}

}  // namespace sbs
