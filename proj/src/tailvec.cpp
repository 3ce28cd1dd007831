#include "pdecert/tailvec.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace pdecert {

Parity combine_parity(Parity a, Parity b) {
    if (a == Parity::None || b == Parity::None) return Parity::None;
    return a == b ? Parity::Even : Parity::Odd;
}

bool parity_allows(Parity p, long k) {
    switch (p) {
        case Parity::Odd: return k % 2 != 0;
        case Parity::Even: return k % 2 == 0;
        default: return true;
    }
}

Interval TailVector::coeff(long k) const {
    if (!allowed(k)) return Interval(0.0);
    if (k == 0) return basis == Basis::Cosine ? c0 : Interval(0.0);
    if (k <= n()) return head[k - 1];
    if (C.is_zero()) return Interval(0.0);
    return C / pow_real(k, Interval(s));
}

TailVector TailVector::zero(Basis b, int n, double s, Parity p) {
    TailVector v;
    v.basis = b;
    v.parity = p;
    v.head.assign(n, Interval(0.0));
    v.s = s;
    return v;
}

TailVector TailVector::from_head(Basis b, std::vector<Interval> head, Interval C, double s, Parity p) {
    TailVector v;
    v.basis = b;
    v.parity = p;
    v.head = std::move(head);
    v.C = C;
    v.s = s;
    v.enforce_parity();
    return v;
}

void TailVector::enforce_parity() {
    if (parity == Parity::None) return;
    for (int k = 1; k <= n(); ++k)
        if (!allowed(k)) head[k - 1] = Interval(0.0);
    if (!allowed(0)) c0 = Interval(0.0);
}

namespace {

Interval inv_pow(long k, double d) { return Interval(1.0) / pow_real(k, Interval(d)); }

// Tail constant of a when viewed under a weaker parity: forbidden modes are 0.
Interval tail_under(const TailVector& a, Parity target) {
    if (a.parity == target || a.parity == Parity::None) return a.C;
    return hull(a.C, Interval(0.0));
}

Parity merged_parity(const TailVector& a, const TailVector& b) {
    return a.parity == b.parity ? a.parity : Parity::None;
}

}  // namespace

void tail_add(const Interval& Ca, double sa, const Interval& Cb, double sb, int n, Interval& C, double& s) {
    if (Ca.is_zero() && Cb.is_zero()) {
        C = Interval(0.0);
        s = std::max(sa, sb);
        return;
    }
    if (Ca.is_zero()) {
        C = Cb;
        s = sb;
        return;
    }
    if (Cb.is_zero()) {
        C = Ca;
        s = sa;
        return;
    }
    if (sa == sb) {
        C = Ca + Cb;
        s = sa;
    } else if (sa < sb) {
        Interval f = Interval::unchecked(0.0, inv_pow(n + 1, sb - sa).hi);
        C = Ca + f * Cb;
        s = sa;
    } else {
        Interval f = Interval::unchecked(0.0, inv_pow(n + 1, sa - sb).hi);
        C = f * Ca + Cb;
        s = sb;
    }
}

TailVector vadd(const TailVector& a0, const TailVector& b0) {
    if (a0.basis != b0.basis) throw BasisMismatch();
    int n = std::max(a0.n(), b0.n());
    TailVector a = extend_head(a0, n), b = extend_head(b0, n);
    TailVector r;
    r.basis = a.basis;
    r.parity = merged_parity(a, b);
    r.c0 = a.c0 + b.c0;
    r.head.resize(n);
    for (int k = 0; k < n; ++k) r.head[k] = a.head[k] + b.head[k];
    tail_add(tail_under(a, r.parity), a.s, tail_under(b, r.parity), b.s, n, r.C, r.s);
    r.enforce_parity();
    return r;
}

TailVector vscale(const TailVector& a, const Interval& c) {
    TailVector r = a;
    r.c0 = a.c0 * c;
    for (auto& x : r.head) x = x * c;
    r.C = a.C * c;
    return r;
}

TailVector vsub(const TailVector& a, const TailVector& b) { return vadd(a, vscale(b, Interval(-1.0))); }

TailVector reindex_lower_s(const TailVector& a, double s_new) {
    if (s_new >= a.s) return a;
    TailVector r = a;
    r.s = s_new;
    if (a.C.is_zero()) return r;
    Interval f = inv_pow(a.n() + 1, a.s - s_new);
    double lo = (Interval(a.C.lo) * f).lo;
    double hi = (Interval(a.C.hi) * f).hi;
    r.C = Interval::unchecked(std::min(0.0, lo), std::max(0.0, hi));
    return r;
}

TailVector extend_head(const TailVector& a, int n_new) {
    if (n_new <= a.n()) return a;
    TailVector r = a;
    r.head.reserve(n_new);
    for (long k = a.n() + 1; k <= n_new; ++k) r.head.push_back(a.coeff(k));
    return r;
}

TailVector absorb_head(const TailVector& a, int k_new) {
    if (k_new >= a.n()) return a;
    if (k_new < 0) k_new = 0;
    TailVector r = a;
    double lo = a.C.lo, hi = a.C.hi;
    for (long i = k_new + 1; i <= a.n(); ++i) {
        if (!a.allowed(i)) continue;
        Interval p = pow_real(i, Interval(a.s));
        const Interval& u = a.head[i - 1];
        lo = std::min(lo, (Interval(u.lo) * p).lo);
        hi = std::max(hi, (Interval(u.hi) * p).hi);
    }
    r.C = Interval::unchecked(lo, hi);
    r.head.resize(k_new);
    return r;
}

TailVector with_head(const TailVector& a, int n_new) {
    return n_new >= a.n() ? extend_head(a, n_new) : absorb_head(a, n_new);
}

TailVector head_part(const TailVector& a, int m) {
    TailVector r = extend_head(a, m);
    r.head.resize(m);
    r.C = Interval(0.0);
    return r;
}

TailVector tail_part(const TailVector& a, int m) {
    TailVector r = extend_head(a, m);
    r.c0 = Interval(0.0);
    for (int k = 0; k < m; ++k) r.head[k] = Interval(0.0);
    return r;
}

Interval tail_constant_at(const TailVector& a, double s_new) {
    if (a.C.is_zero()) return Interval(0.0);
    if (s_new <= a.s) return reindex_lower_s(a, s_new).C;
    throw std::domain_error("cannot raise a nonzero tail exponent");
}

namespace {

// Upper bound of sum_{i>n} i^{-p}, p > 1.
Interval power_tail(double p, long n) {
    Interval pm1 = Interval(p) - Interval(1.0);
    if (n <= 0) return Interval(1.0) + Interval(1.0) / pm1;
    return pow_real(n, Interval(1.0) - Interval(p)) / pm1;
}

}  // namespace

Interval tail_sum_bound(const Interval& C, double s, long n) {
    if (C.is_zero()) return Interval(0.0);
    if (s <= 1.0) throw ExponentNotSummable();
    if (!C.bounded()) throw UnboundedRepresentation();
    return Interval(C.mag()) * power_tail(s, n);
}

Interval sup_norm_bound(const TailVector& a) {
    if (!a.bounded() || !a.C.bounded()) throw UnboundedRepresentation();
    Interval sum(0.0);
    if (a.basis == Basis::Cosine) sum += abs_bound(a.c0);
    for (const auto& x : a.head) sum += abs_bound(x);
    return sum + tail_sum_bound(a.C, a.s, a.n());
}

Interval h2_norm_sq_bound(const TailVector& a) {
    Interval sum(0.0);
    for (long k = 1; k <= a.n(); ++k) sum += sqr(a.head[k - 1]) * ipow(Interval(double(k)), 4);
    if (a.C.is_zero()) return sum;
    if (a.s <= 2.5) throw ExponentNotSummable("H2 bound needs s > 5/2");
    if (!a.C.bounded()) throw UnboundedRepresentation();
    Interval t = sqr(Interval(a.C.mag())) * power_tail(2.0 * (a.s - 2.0), a.n());
    return sum + Interval::unchecked(0.0, t.hi);
}

namespace {

bool interval_in(const Interval& a, const Interval& b, bool interior) {
    if (interior) return (a.is_zero() && b.is_zero()) || subset_interior(a, b);
    return subset(a, b);
}

bool tail_in(const TailVector& a, const TailVector& b, bool interior) {
    // modes forbidden in a but allowed in b carry the value 0
    bool zero_modes = false, a_only = false;
    if (a.parity != b.parity) {
        if (a.parity != Parity::None) zero_modes = true;
        if (b.parity != Parity::None) a_only = true;
    }
    if (a_only && !a.C.is_zero()) return false;
    if (zero_modes && !interval_in(Interval(0.0), b.C, interior)) return false;
    if (a.C.is_zero()) return interval_in(Interval(0.0), b.C, interior);
    if (a.s < b.s) return false;
    return interval_in(reindex_lower_s(a, b.s).C, b.C, interior);
}

bool vin(const TailVector& a0, const TailVector& b0, bool interior) {
    if (a0.basis != b0.basis) throw BasisMismatch();
    int n = std::max(a0.n(), b0.n());
    TailVector a = extend_head(a0, n), b = extend_head(b0, n);
    if (a.basis == Basis::Cosine && (a.allowed(0) || b.allowed(0)))
        if (!interval_in(a.coeff(0), b.coeff(0), interior)) return false;
    for (long k = 1; k <= n; ++k) {
        if (!a.allowed(k) && !b.allowed(k)) continue;
        if (!interval_in(a.coeff(k), b.coeff(k), interior)) return false;
    }
    return tail_in(a, b, interior);
}

}  // namespace

bool vsubset(const TailVector& a, const TailVector& b) { return vin(a, b, false); }
bool vsubset_interior(const TailVector& a, const TailVector& b) { return vin(a, b, true); }

TailVector vintersect(const TailVector& a0, const TailVector& b0) {
    if (a0.basis != b0.basis) throw BasisMismatch();
    int n = std::max(a0.n(), b0.n());
    TailVector a = extend_head(a0, n), b = extend_head(b0, n);
    TailVector r = a;
    if (a.parity != b.parity) r.parity = a.parity == Parity::None ? b.parity : a.parity;
    auto cut = [](const Interval& x, const Interval& y) {
        auto z = intersect(x, y);
        if (!z) throw std::runtime_error("empty intersection of enclosures");
        return *z;
    };
    r.c0 = cut(a.c0, b.c0);
    for (int k = 0; k < n; ++k) r.head[k] = cut(a.head[k], b.head[k]);
    if (a.s == b.s) {
        r.C = cut(a.C, b.C);
    } else if (b.s > a.s) {
        r.C = b.C;
        r.s = b.s;
    }
    r.enforce_parity();
    return r;
}

TailVector vhull(const TailVector& a0, const TailVector& b0) {
    if (a0.basis != b0.basis) throw BasisMismatch();
    int n = std::max(a0.n(), b0.n());
    TailVector a = extend_head(a0, n), b = extend_head(b0, n);
    TailVector r = a;
    r.parity = merged_parity(a, b);
    r.c0 = hull(a.c0, b.c0);
    for (int k = 0; k < n; ++k) r.head[k] = hull(a.head[k], b.head[k]);
    double s;
    if (a.C.is_zero() && b.C.is_zero()) s = std::max(a.s, b.s);
    else if (a.C.is_zero()) s = b.s;
    else if (b.C.is_zero()) s = a.s;
    else s = std::min(a.s, b.s);
    TailVector ta = a, tb = b;
    ta.C = tail_under(a, r.parity);
    tb.C = tail_under(b, r.parity);
    Interval ca = ta.C.is_zero() ? Interval(0.0) : reindex_lower_s(ta, s).C;
    Interval cb = tb.C.is_zero() ? Interval(0.0) : reindex_lower_s(tb, s).C;
    r.C = hull(ca, cb);
    r.s = s;
    return r;
}

double head_max_mag(const TailVector& a) {
    double m = a.basis == Basis::Cosine ? a.c0.mag() : 0.0;
    for (const auto& x : a.head) m = std::max(m, x.mag());
    return m;
}

std::string to_certificate(const TailVector& a) {
    std::ostringstream os;
    if (a.basis == Basis::Cosine) os << "0: " << to_string(a.c0) << "\n";
    for (int k = 1; k <= a.n(); ++k) os << k << ": " << to_string(a.head[k - 1]) << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", a.s);
    os << "tail: C=" << to_string(a.C) << " s=" << buf << " n=" << a.n() << "\n";
    return os.str();
}

}  // namespace pdecert
