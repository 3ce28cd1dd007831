#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace pdecert {

struct DivisionByZeroInterval : std::domain_error {
    DivisionByZeroInterval() : std::domain_error("division by an interval containing zero") {}
};

struct EigenvalueContainsZero : std::domain_error {
    EigenvalueContainsZero() : std::domain_error("eigenvalue interval contains zero") {}
};

namespace rnd {

constexpr double kInf = std::numeric_limits<double>::infinity();

inline double next_up(double x) {
    if (std::isnan(x) || x == kInf) return x;
    if (x == 0.0) return std::numeric_limits<double>::denorm_min();
    auto b = std::bit_cast<std::uint64_t>(x);
    b = x > 0 ? b + 1 : b - 1;
    return std::bit_cast<double>(b);
}

inline double next_down(double x) { return -next_up(-x); }

inline double nudge_up(double x, int k) {
    for (int i = 0; i < k; ++i) x = next_up(x);
    return x;
}
inline double nudge_down(double x, int k) {
    for (int i = 0; i < k; ++i) x = next_down(x);
    return x;
}

// Directed rounding by error-free transformations: the sign of the exact
// rounding error decides whether the native result has to move.
inline double add_up(double a, double b) {
    double s = a + b;
    if (!std::isfinite(s)) return std::isnan(s) ? s : (s > 0 ? s : -std::numeric_limits<double>::max());
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return err > 0 ? next_up(s) : s;
}
inline double add_down(double a, double b) { return -add_up(-a, -b); }
inline double sub_up(double a, double b) { return add_up(a, -b); }
inline double sub_down(double a, double b) { return add_down(a, -b); }

constexpr double kTiny = 0x1p-960;

inline double mul_up(double a, double b) {
    if (a == 0.0 || b == 0.0) return 0.0;
    double p = a * b;
    if (!std::isfinite(p)) return std::isnan(p) ? p : (p > 0 ? p : -std::numeric_limits<double>::max());
    if (std::fabs(p) < kTiny) return next_up(p);
    double e = std::fma(a, b, -p);
    return e > 0 ? next_up(p) : p;
}
inline double mul_down(double a, double b) { return -mul_up(-a, b); }

inline double div_up(double a, double b) {
    double q = a / b;
    if (!std::isfinite(q)) return std::isnan(q) ? q : (q > 0 ? q : -std::numeric_limits<double>::max());
    if (a == 0.0) return 0.0;
    if (std::fabs(q) < kTiny || std::fabs(b) < kTiny || std::isinf(b)) return next_up(q);
    // a - q*b has the sign of (a/b - q) * b
    double r = std::fma(-q, b, a);
    if (r == 0.0) return q;
    bool above = (r > 0) == (b > 0);
    return above ? next_up(q) : q;
}
inline double div_down(double a, double b) { return -div_up(-a, b); }

inline double sqrt_up(double a) {
    double r = std::sqrt(a);
    if (!std::isfinite(r) || r == 0.0) return r;
    double e = std::fma(-r, r, a);
    return e > 0 ? next_up(r) : r;
}
inline double sqrt_down(double a) {
    double r = std::sqrt(a);
    if (!std::isfinite(r) || r == 0.0) return r;
    double e = std::fma(-r, r, a);
    return e < 0 ? next_down(r) : r;
}

// libm results widened by this many ulp in each direction.
constexpr int kTranscendentalUlp = 4;

}  // namespace rnd

/// Closed interval [lo, hi] with outward-rounded arithmetic.
/// Infinite endpoints are allowed only for unbounded tail constants.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    constexpr Interval() = default;
    constexpr Interval(double v) : lo(v), hi(v) {}  // NOLINT implicit point
    Interval(double l, double h) : lo(l), hi(h) {
        if (std::isnan(l) || std::isnan(h) || l > h)
            throw std::invalid_argument("invalid interval endpoints");
    }

    static Interval unchecked(double l, double h) {
        Interval r;
        r.lo = l;
        r.hi = h;
        return r;
    }
    static Interval entire() { return unchecked(-rnd::kInf, rnd::kInf); }

    double mid() const { return lo == hi ? lo : 0.5 * lo + 0.5 * hi; }
    double width() const { return rnd::sub_up(hi, lo); }
    double rad() const { return 0.5 * width(); }
    double mag() const { return std::fmax(std::fabs(lo), std::fabs(hi)); }
    double mig() const { return (lo <= 0 && hi >= 0) ? 0.0 : std::fmin(std::fabs(lo), std::fabs(hi)); }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
    bool is_point() const { return lo == hi; }
    bool is_zero() const { return lo == 0.0 && hi == 0.0; }
    bool bounded() const { return std::isfinite(lo) && std::isfinite(hi); }

    Interval operator-() const { return unchecked(-hi, -lo); }
    Interval& operator+=(const Interval& o);
    Interval& operator-=(const Interval& o);
    Interval& operator*=(const Interval& o);
    Interval& operator/=(const Interval& o);

    friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

inline Interval operator+(const Interval& a, const Interval& b) {
    return Interval::unchecked(rnd::add_down(a.lo, b.lo), rnd::add_up(a.hi, b.hi));
}
inline Interval operator-(const Interval& a, const Interval& b) {
    return Interval::unchecked(rnd::sub_down(a.lo, b.hi), rnd::sub_up(a.hi, b.lo));
}

Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);

inline Interval& Interval::operator+=(const Interval& o) { return *this = *this + o; }
inline Interval& Interval::operator-=(const Interval& o) { return *this = *this - o; }
inline Interval& Interval::operator*=(const Interval& o) { return *this = *this * o; }
inline Interval& Interval::operator/=(const Interval& o) { return *this = *this / o; }

/// Magnitude max(|lo|,|hi|) as a point interval.
inline Interval abs_bound(const Interval& a) { return Interval(a.mag()); }
Interval abs(const Interval& a);
Interval sqr(const Interval& a);
Interval sqrt(const Interval& a);

Interval exp(const Interval& a);
Interval expm1(const Interval& a);
Interval log(const Interval& a);
Interval sin(const Interval& a);
Interval cos(const Interval& a);

/// k^s for a positive integer k; exact repeated squaring for small integer s.
Interval pow_real(long k, const Interval& s);
/// x^s for x > 0.
Interval pow(const Interval& x, double s);
/// Integer power with sign handling.
Interval ipow(const Interval& x, int n);

/// (e^{lambda*tau} - 1)/lambda for tau >= 0.
Interval expm1_div(const Interval& lambda, const Interval& tau);

Interval pi();

Interval hull(const Interval& a, const Interval& b);
std::optional<Interval> intersect(const Interval& a, const Interval& b);
bool subset(const Interval& a, const Interval& b);
bool subset_interior(const Interval& a, const Interval& b);

Interval max(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);

/// Interval [-r, r].
inline Interval ball(double r) { return Interval::unchecked(-r, r); }
inline Interval unit() { return Interval::unchecked(-1.0, 1.0); }

std::string to_string(const Interval& a);
Interval parse_interval(const std::string& s);
std::ostream& operator<<(std::ostream& os, const Interval& a);

}  // namespace pdecert
