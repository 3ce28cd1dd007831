#pragma once
// MPFR reference values at 256 bits.

#include <mpfr.h>

#include "pdecert/interval.hpp"

namespace oracle {

class Big {
public:
    Big() { mpfr_init2(v_, 256); mpfr_set_zero(v_, 1); }
    explicit Big(double d) { mpfr_init2(v_, 256); mpfr_set_d(v_, d, MPFR_RNDN); }
    Big(const Big& o) { mpfr_init2(v_, 256); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Big& operator=(const Big& o) { mpfr_set(v_, o.v_, MPFR_RNDN); return *this; }
    ~Big() { mpfr_clear(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    friend Big operator+(const Big& a, const Big& b) { Big r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Big operator-(const Big& a, const Big& b) { Big r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Big operator*(const Big& a, const Big& b) { Big r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Big operator/(const Big& a, const Big& b) { Big r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

inline Big big_exp(const Big& a) { Big r; mpfr_exp(r.get(), a.get(), MPFR_RNDN); return r; }
inline Big big_expm1(const Big& a) { Big r; mpfr_expm1(r.get(), a.get(), MPFR_RNDN); return r; }
inline Big big_log(const Big& a) { Big r; mpfr_log(r.get(), a.get(), MPFR_RNDN); return r; }
inline Big big_sin(const Big& a) { Big r; mpfr_sin(r.get(), a.get(), MPFR_RNDN); return r; }
inline Big big_cos(const Big& a) { Big r; mpfr_cos(r.get(), a.get(), MPFR_RNDN); return r; }
inline Big big_sqrt(const Big& a) { Big r; mpfr_sqrt(r.get(), a.get(), MPFR_RNDN); return r; }
inline Big big_pi() { Big r; mpfr_const_pi(r.get(), MPFR_RNDN); return r; }

// lo <= a <= hi with the comparison done exactly
inline bool in(const Big& a, const pdecert::Interval& x) {
    return mpfr_cmp_d(a.get(), x.lo) >= 0 && mpfr_cmp_d(a.get(), x.hi) <= 0;
}
inline bool strictly_in(const Big& a, const pdecert::Interval& x) {
    return mpfr_cmp_d(a.get(), x.lo) > 0 && mpfr_cmp_d(a.get(), x.hi) < 0;
}

}  // namespace oracle
