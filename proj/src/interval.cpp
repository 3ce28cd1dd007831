#include "pdecert/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace pdecert {

using namespace rnd;

Interval operator*(const Interval& a, const Interval& b) {
    using I = Interval;
    if (a.lo >= 0) {
        if (b.lo >= 0) return I::unchecked(mul_down(a.lo, b.lo), mul_up(a.hi, b.hi));
        if (b.hi <= 0) return I::unchecked(mul_down(a.hi, b.lo), mul_up(a.lo, b.hi));
        return I::unchecked(mul_down(a.hi, b.lo), mul_up(a.hi, b.hi));
    }
    if (a.hi <= 0) {
        if (b.lo >= 0) return I::unchecked(mul_down(a.lo, b.hi), mul_up(a.hi, b.lo));
        if (b.hi <= 0) return I::unchecked(mul_down(a.hi, b.hi), mul_up(a.lo, b.lo));
        return I::unchecked(mul_down(a.lo, b.hi), mul_up(a.lo, b.lo));
    }
    if (b.lo >= 0) return I::unchecked(mul_down(a.lo, b.hi), mul_up(a.hi, b.hi));
    if (b.hi <= 0) return I::unchecked(mul_down(a.hi, b.lo), mul_up(a.lo, b.lo));
    return I::unchecked(std::min(mul_down(a.lo, b.hi), mul_down(a.hi, b.lo)),
                        std::max(mul_up(a.lo, b.lo), mul_up(a.hi, b.hi)));
}

Interval operator/(const Interval& a, const Interval& b) {
    using I = Interval;
    if (b.contains_zero()) throw DivisionByZeroInterval();
    if (b.lo > 0) {
        if (a.lo >= 0) return I::unchecked(div_down(a.lo, b.hi), div_up(a.hi, b.lo));
        if (a.hi <= 0) return I::unchecked(div_down(a.lo, b.lo), div_up(a.hi, b.hi));
        return I::unchecked(div_down(a.lo, b.lo), div_up(a.hi, b.lo));
    }
    if (a.lo >= 0) return I::unchecked(div_down(a.hi, b.hi), div_up(a.lo, b.lo));
    if (a.hi <= 0) return I::unchecked(div_down(a.hi, b.lo), div_up(a.lo, b.hi));
    return I::unchecked(div_down(a.hi, b.hi), div_up(a.lo, b.hi));
}

Interval abs(const Interval& a) {
    if (a.lo >= 0) return a;
    if (a.hi <= 0) return -a;
    return Interval::unchecked(0.0, a.mag());
}

Interval sqr(const Interval& a) {
    Interval m = abs(a);
    return Interval::unchecked(mul_down(m.lo, m.lo), mul_up(m.hi, m.hi));
}

Interval sqrt(const Interval& a) {
    if (a.lo < 0) throw std::domain_error("sqrt of negative interval");
    return Interval::unchecked(sqrt_down(a.lo), sqrt_up(a.hi));
}

namespace {

double exp_down(double x) {
    if (x == 0.0) return 1.0;
    if (x == -kInf) return 0.0;
    return std::max(0.0, nudge_down(std::exp(x), kTranscendentalUlp));
}
double exp_up(double x) {
    if (x == 0.0) return 1.0;
    if (x == -kInf) return 0.0;
    return nudge_up(std::exp(x), kTranscendentalUlp);
}

}  // namespace

Interval exp(const Interval& a) { return Interval::unchecked(exp_down(a.lo), exp_up(a.hi)); }

Interval expm1(const Interval& a) {
    auto dn = [](double x) {
        if (x == 0.0) return 0.0;
        if (x == -kInf) return -1.0;
        return std::max(-1.0, nudge_down(std::expm1(x), kTranscendentalUlp));
    };
    auto up = [](double x) {
        if (x == 0.0) return 0.0;
        if (x == -kInf) return -1.0;
        return nudge_up(std::expm1(x), kTranscendentalUlp);
    };
    return Interval::unchecked(dn(a.lo), up(a.hi));
}

Interval log(const Interval& a) {
    if (!(a.lo > 0)) throw std::domain_error("log of non-positive interval");
    auto dn = [](double x) { return x == 1.0 ? 0.0 : nudge_down(std::log(x), kTranscendentalUlp); };
    auto up = [](double x) { return x == 1.0 ? 0.0 : nudge_up(std::log(x), kTranscendentalUlp); };
    return Interval::unchecked(dn(a.lo), up(a.hi));
}

Interval pi() {
    // 3.141592653589793 is the double just below pi
    constexpr double lo = 3.141592653589793;
    return Interval::unchecked(lo, next_up(lo));
}

namespace {

// True when offset*pi/2 + 2*k*pi may lie in a for some integer k.
bool may_contain_phase(const Interval& a, int offset) {
    const Interval p = pi();
    const Interval shift = Interval(offset) * p / Interval(2.0);
    const Interval period = Interval(2.0) * p;
    double kf = std::floor((a.lo - shift.mid()) / period.mid());
    for (double k = kf - 1; k <= kf + 2; k += 1.0) {
        Interval x = shift + Interval(k) * period;
        if (x.hi >= a.lo && x.lo <= a.hi) return true;
    }
    return false;
}

Interval trig_range(const Interval& a, bool cosine) {
    if (a.is_point() && a.lo == 0.0) return cosine ? Interval(1.0) : Interval(0.0);
    if (!a.bounded() || a.width() >= 6.28 || a.mag() > 1e9) return unit();
    auto f = [cosine](double x) { return cosine ? std::cos(x) : std::sin(x); };
    double va = f(a.lo), vb = f(a.hi);
    double lo = nudge_down(std::min(va, vb), kTranscendentalUlp);
    double hi = nudge_up(std::max(va, vb), kTranscendentalUlp);
    if (may_contain_phase(a, cosine ? 0 : 1)) hi = 1.0;
    if (may_contain_phase(a, cosine ? 2 : 3)) lo = -1.0;
    return Interval::unchecked(std::max(lo, -1.0), std::min(hi, 1.0));
}

}  // namespace

Interval sin(const Interval& a) { return trig_range(a, false); }
Interval cos(const Interval& a) { return trig_range(a, true); }

Interval ipow(const Interval& x, int n) {
    if (n == 0) return Interval(1.0);
    if (n < 0) return Interval(1.0) / ipow(x, -n);
    auto pos_pow = [](Interval b, int e) {
        // b >= 0; monotone so endpoint rounding directions carry through
        Interval r(1.0);
        while (e > 0) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    };
    if (x.lo >= 0) return pos_pow(x, n);
    if (x.hi <= 0) return (n % 2 == 0) ? pos_pow(-x, n) : -pos_pow(-x, n);
    if (n % 2 == 0) return Interval::unchecked(0.0, pos_pow(Interval(x.mag()), n).hi);
    return Interval::unchecked(-pos_pow(Interval(-x.lo), n).hi, pos_pow(Interval(x.hi), n).hi);
}

namespace {
bool small_integer(double s, int& n) {
    if (std::fabs(s) <= 64 && s == std::floor(s)) {
        n = static_cast<int>(s);
        return true;
    }
    return false;
}
}  // namespace

Interval pow_real(long k, const Interval& s) {
    if (k < 1) throw std::domain_error("pow_real requires k >= 1");
    if (k == 1) return Interval(1.0);
    int n;
    if (s.is_point() && small_integer(s.lo, n)) return ipow(Interval(static_cast<double>(k)), n);
    return exp(s * log(Interval(static_cast<double>(k))));
}

Interval pow(const Interval& x, double s) {
    int n;
    if (small_integer(s, n)) return ipow(x, n);
    if (!(x.lo > 0)) {
        if (x.lo == 0 && s > 0) {
            Interval up = exp(Interval(s) * log(Interval(x.hi)));
            return Interval::unchecked(0.0, up.hi);
        }
        throw std::domain_error("pow of non-positive interval");
    }
    return exp(Interval(s) * log(x));
}

Interval expm1_div(const Interval& lambda, const Interval& tau) {
    if (lambda.contains_zero()) throw EigenvalueContainsZero();
    if (tau.lo < 0) throw std::domain_error("expm1_div requires tau >= 0");
    // (e^{l t}-1)/l = int_0^t e^{l r} dr is increasing in both l and t
    auto eval = [](double l, double t) {
        if (t == 0.0) return Interval(0.0);
        Interval L(l);
        return expm1(L * Interval(t)) / L;
    };
    return Interval::unchecked(eval(lambda.lo, tau.lo).lo, eval(lambda.hi, tau.hi).hi);
}

Interval hull(const Interval& a, const Interval& b) {
    return Interval::unchecked(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    double lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
    if (lo > hi) return std::nullopt;
    return Interval::unchecked(lo, hi);
}

bool subset(const Interval& a, const Interval& b) { return b.lo <= a.lo && a.hi <= b.hi; }
bool subset_interior(const Interval& a, const Interval& b) { return b.lo < a.lo && a.hi < b.hi; }

Interval max(const Interval& a, const Interval& b) {
    return Interval::unchecked(std::max(a.lo, b.lo), std::max(a.hi, b.hi));
}
Interval min(const Interval& a, const Interval& b) {
    return Interval::unchecked(std::min(a.lo, b.lo), std::min(a.hi, b.hi));
}

std::string to_string(const Interval& a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "[%.17g,%.17g]", a.lo, a.hi);
    return buf;
}

Interval parse_interval(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (!t.empty() && t.front() == '[') {
        auto comma = t.find(',');
        if (comma == std::string::npos || t.back() != ']') throw std::invalid_argument("bad interval: " + s);
        double lo = std::stod(t.substr(1, comma - 1));
        double hi = std::stod(t.substr(comma + 1, t.size() - comma - 2));
        return Interval(lo, hi);
    }
    double v = std::stod(t);
    return Interval(v);
}

std::ostream& operator<<(std::ostream& os, const Interval& a) { return os << to_string(a); }

}  // namespace pdecert
