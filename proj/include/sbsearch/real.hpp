#pragma once

#include <mpfr.h>

#include <string>

namespace sbs {

// Owning MPFR value; default 256-bit precision.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 256) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Fixed-point decimal with `digits` places after the point.
    std::string str(int digits) const {
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Rf", digits, v_);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    }

private:
    mpfr_t v_;
};

}  // namespace sbs
