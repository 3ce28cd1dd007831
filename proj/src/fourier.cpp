#include "pdecert/fourier.hpp"

#include <algorithm>

namespace pdecert {

namespace {

const Interval kHalf(0.5);

// n^{1-p}/(p-1), the bound of sum_{i>n} i^{-p}
Interval tail_pow(long n, const Interval& p) { return pow_real(n, Interval(1.0) - p) / (p - Interval(1.0)); }

Interval mag(const Interval& x) { return Interval(x.mag()); }

std::vector<Interval> table(const TailVector& a, int len) {
    std::vector<Interval> t(len + 1);
    for (int j = 0; j <= len; ++j) t[j] = a.coeff(j);
    return t;
}

// Common head length and exponent for the equal-exponent lemmas.
void normalize(TailVector& u, TailVector& v) {
    int n = std::max({u.n(), v.n(), 1});
    u = extend_head(u, n);
    v = extend_head(v, n);
    double s;
    if (u.C.is_zero() && v.C.is_zero()) s = std::max(u.s, v.s);
    else if (u.C.is_zero()) s = v.s;
    else if (v.C.is_zero()) s = u.s;
    else s = std::min(u.s, v.s);
    if (s <= 1.0 && !(u.C.is_zero() && v.C.is_zero())) throw ExponentNotSummable();
    u = u.C.is_zero() ? u : reindex_lower_s(u, s);
    v = v.C.is_zero() ? v : reindex_lower_s(v, s);
    u.s = v.s = s;
}

void common_head(TailVector& u, TailVector& v) {
    int n = std::max({u.n(), v.n(), 1});
    u = extend_head(u, n);
    v = extend_head(v, n);
}

// u_0 v_k + 1/2 (sum_{i<=n} v_{i+k} u_i - sum_{i<=n} v_i u_{k+i} + sum_{i<k} v_i u_{k-i})
Interval finite_cos_sin(const std::vector<Interval>& U, const std::vector<Interval>& V, int n, int k) {
    Interval a(0.0), b(0.0), c(0.0);
    for (int i = 1; i <= n; ++i) {
        a += V[i + k] * U[i];
        b += V[i] * U[k + i];
    }
    for (int i = 1; i < k; ++i) c += V[i] * U[k - i];
    return U[0] * V[k] + kHalf * (a - b + c);
}

TailVector sine_result(const TailVector& u, const TailVector& v, int n) {
    TailVector r = TailVector::zero(Basis::Sine, 2 * n, 2.0, combine_parity(u.parity, v.parity));
    return r;
}

}  // namespace

TailVector conv_sin_sin(const TailVector& u0, const TailVector& v0) {
    if (u0.basis != Basis::Sine || v0.basis != Basis::Sine) throw BasisMismatch();
    TailVector u = u0, v = v0;
    normalize(u, v);
    const int n = u.n();
    const double s = u.s;
    const Interval S(s);
    auto U = table(u, 3 * n), V = table(v, 3 * n);
    const Interval Cu = mag(u.C), Cv = mag(v.C);
    const bool tails = !(u.C.is_zero() || v.C.is_zero());
    const Interval rem = tails ? Cu * Cv * tail_pow(n, Interval(2.0) * S) : Interval(0.0);

    TailVector r = TailVector::zero(Basis::Cosine, 2 * n, s, combine_parity(u.parity, v.parity));
    Interval c0(0.0);
    for (int i = 1; i <= n; ++i) c0 += U[i] * V[i];
    r.c0 = kHalf * c0 + kHalf * rem * unit();
    for (int k = 1; k <= 2 * n; ++k) {
        // symmetric pairing keeps the result invariant under u <-> v
        Interval a(0.0), c(0.0);
        for (int i = 1; i <= n; ++i) a += U[i] * V[i + k] + U[i + k] * V[i];
        for (int i = 1; 2 * i < k; ++i) c += U[i] * V[k - i] + U[k - i] * V[i];
        if (k % 2 == 0) c += U[k / 2] * V[k / 2];
        r.head[k - 1] = kHalf * (a - c) + rem * unit();
    }

    Interval D(0.0);
    if (!(u.C.is_zero() && v.C.is_zero())) {
        const Interval m2(2.0 * n + 1.0);
        for (int i = 1; i <= n; ++i) {
            Interval w = Cu * mag(V[i]) + Cv * mag(U[i]);
            D += w * (Interval(1.0) + pow(m2 / Interval(2.0 * n + 1.0 - i), s));
        }
        if (tails) D += Cu * Cv * (Interval(2.0) + pow_real(2, S)) * tail_pow(n, S);
        D = kHalf * D;
    }
    r.C = D * unit();
    r.enforce_parity();
    return r;
}

TailVector conv_cos_sin(const TailVector& u0, const TailVector& v0) {
    if (u0.basis != Basis::Cosine || v0.basis != Basis::Sine) throw BasisMismatch();
    TailVector u = u0, v = v0;
    normalize(u, v);
    const int n = u.n();
    const double s = u.s;
    const Interval S(s);
    auto U = table(u, 3 * n), V = table(v, 3 * n);
    const Interval Cu = mag(u.C), Cv = mag(v.C);
    const bool tails = !(u.C.is_zero() || v.C.is_zero());
    const Interval rem = tails ? Cu * Cv * tail_pow(n, Interval(2.0) * S) : Interval(0.0);

    TailVector r = sine_result(u, v, n);
    r.s = s;
    for (int k = 1; k <= 2 * n; ++k) r.head[k - 1] = finite_cos_sin(U, V, n, k) + rem * unit();

    Interval D(0.0);
    if (!v.C.is_zero()) D += mag(U[0]) * Cv;
    if (!(u.C.is_zero() && v.C.is_zero())) {
        const Interval m2(2.0 * n + 1.0);
        Interval sum(0.0);
        for (int i = 1; i <= n; ++i) {
            Interval w = Cu * mag(V[i]) + Cv * mag(U[i]);
            sum += w * (Interval(1.0) + pow(m2 / Interval(2.0 * n + 1.0 - i), s));
        }
        if (tails) sum += Cu * Cv * (Interval(2.0) + pow_real(2, S)) * tail_pow(n, S);
        D += kHalf * sum;
    }
    r.C = D * unit();
    r.enforce_parity();
    return r;
}

TailVector conv_cos_sin_unbounded(const TailVector& u0, const TailVector& v0) {
    if (u0.basis != Basis::Cosine || v0.basis != Basis::Sine) throw BasisMismatch();
    const double s1 = u0.s, s2 = v0.s;
    if (!(s1 > 1.0) || !(s2 <= 0.0) || !(s1 + s2 > 1.0))
        throw AdmissibilityViolation("cos*sin diverging: need s1 > 1, s2 <= 0, s1 + s2 > 1");
    TailVector u = u0, v = v0;
    common_head(u, v);
    const int n = u.n();
    const Interval S1(s1), S2(s2), S12 = S1 + S2;
    auto U = table(u, 3 * n), V = table(v, 3 * n);
    const Interval Cu = mag(u.C), Cv = mag(v.C);
    const bool tails = !(u.C.is_zero() || v.C.is_zero());
    const Interval base = tails ? Cu * Cv * tail_pow(n, S12) : Interval(0.0);

    TailVector r = sine_result(u, v, n);
    r.s = s2;
    const Interval n1(n + 1.0);
    for (int k = 1; k <= 2 * n; ++k) {
        Interval rem(0.0);
        if (tails) rem = kHalf * (Interval(1.0) + pow(n1 / Interval(n + 1.0 + k), s2)) * base;
        r.head[k - 1] = finite_cos_sin(U, V, n, k) + rem * unit();
    }

    Interval D = mag(U[0]) * Cv;
    const double m2 = 2.0 * n + 1.0;
    Interval sum1(0.0), sum2(0.0);
    for (int i = 1; i <= n; ++i) {
        Interval up(m2 + i), dn(m2 - i);
        Interval g = pow(Interval(m2) / up, s2);
        sum1 += g * (Cv * mag(U[i]) + Cu * mag(V[i]) * pow(Interval(1.0) / up, s1 - s2));
        sum2 += Cv * mag(U[i]) + Cu * mag(V[i]) * pow(Interval(1.0) / dn, s1 - s2);
    }
    D += kHalf * sum1 + kHalf * sum2;
    if (tails) {
        Interval gamma = Interval(m2) * n1 / Interval(3.0 * n + 2.0);
        D += pow(gamma, s2) * base;
        D += kHalf * Cv * Cu * tail_pow(n, S1);
    }
    r.C = D * unit();
    r.enforce_parity();
    return r;
}

TailVector conv_cos_sin_slow(const TailVector& u0, const TailVector& v0) {
    if (u0.basis != Basis::Cosine || v0.basis != Basis::Sine) throw BasisMismatch();
    const double s1 = u0.s, s2 = v0.s;
    if (!(s1 > 1.0) || !(s2 > 0.0 && s2 <= 1.0) || !(s1 - s2 > 1.0))
        throw AdmissibilityViolation("cos*sin slow: need s1 > 1, 0 < s2 <= 1, s1 - s2 > 1");
    TailVector u = u0, v = v0;
    common_head(u, v);
    const int n = u.n();
    const Interval S1(s1), S2(s2);
    auto U = table(u, 3 * n), V = table(v, 3 * n);
    const Interval Cu = mag(u.C), Cv = mag(v.C);
    const bool tails = !(u.C.is_zero() || v.C.is_zero());
    const Interval rem = tails ? Cu * Cv * tail_pow(n, S1 + S2) : Interval(0.0);

    TailVector r = sine_result(u, v, n);
    r.s = s2;
    for (int k = 1; k <= 2 * n; ++k) r.head[k - 1] = finite_cos_sin(U, V, n, k) + rem * unit();

    Interval D = mag(U[0]) * Cv;
    const double m2 = 2.0 * n + 1.0;
    Interval sum1(0.0), sum2(0.0);
    for (int i = 1; i <= n; ++i) {
        Interval up(m2 + i), dn(m2 - i);
        sum1 += Cv * mag(U[i]) + Cu * mag(V[i]) / pow(up, s1 - s2);
        Interval g = pow(Interval(1.0) + Interval(double(i)) / dn, s2);
        sum2 += (Cv * mag(U[i]) + Cu * mag(V[i]) * pow(Interval(1.0) / dn, s1 - s2)) * g;
    }
    D += kHalf * sum1 + kHalf * sum2;
    if (tails) {
        D += Cu * Cv * tail_pow(n, S1);
        D += Cu * Cv * pow(Interval(2.0) / Interval(n + 1.0), s2) * tail_pow(n, S1 - S2);
    }
    r.C = D * unit();
    r.enforce_parity();
    return r;
}

TailVector conv_cos_sin_any(const TailVector& u0, const TailVector& v0) {
    TailVector u = u0, v = v0;
    if (v.C.is_zero()) v.s = std::max(v.s, 2.0);
    if (u.C.is_zero()) {
        if (v.s > 1.0) u.s = v.s;
        else if (v.s <= 0.0) u.s = 2.0 - v.s;
        else u.s = v.s + 2.0;
    }
    if (v.s > 1.0) return conv_cos_sin(u, v);
    if (v.s <= 0.0) return conv_cos_sin_unbounded(u, v);
    return conv_cos_sin_slow(u, v);
}

TailVector d_dx(const TailVector& v, bool require_bounded) {
    TailVector r = v;
    r.s = v.s - 1.0;
    if (require_bounded && !v.C.is_zero() && r.s <= 1.0) throw ExponentNotSummable();
    if (v.basis == Basis::Sine) {
        r.basis = Basis::Cosine;
        r.c0 = Interval(0.0);
        for (int k = 1; k <= v.n(); ++k) r.head[k - 1] = Interval(double(k)) * v.head[k - 1];
    } else {
        r.basis = Basis::Sine;
        r.c0 = Interval(0.0);
        for (int k = 1; k <= v.n(); ++k) r.head[k - 1] = Interval(-double(k)) * v.head[k - 1];
        r.C = -v.C;
    }
    return r;
}

void galerkin_sin_sin(const std::vector<Interval>& u, const std::vector<Interval>& v, int K,
                      std::vector<Interval>& out) {
    out.assign(K + 1, Interval(0.0));
    const int mu = static_cast<int>(u.size()), mv = static_cast<int>(v.size());
    for (int i = 1; i <= mu; ++i) {
        if (u[i - 1].is_zero()) continue;
        for (int j = 1; j <= mv; ++j) {
            if (v[j - 1].is_zero()) continue;
            Interval p = kHalf * (u[i - 1] * v[j - 1]);
            int d = std::abs(i - j);
            if (d <= K) out[d] += p;
            if (i + j <= K) out[i + j] -= p;
        }
    }
}

void galerkin_cos_sin(const std::vector<Interval>& c, const std::vector<Interval>& v, int K,
                      std::vector<Interval>& out) {
    out.assign(K, Interval(0.0));
    const int mc = static_cast<int>(c.size()) - 1, mv = static_cast<int>(v.size());
    for (int j = 1; j <= mv && j <= K; ++j) out[j - 1] += c[0] * v[j - 1];
    for (int i = 1; i <= mc; ++i) {
        if (c[i].is_zero()) continue;
        for (int j = 1; j <= mv; ++j) {
            if (v[j - 1].is_zero()) continue;
            Interval p = kHalf * (c[i] * v[j - 1]);
            if (i + j <= K) out[i + j - 1] += p;
            if (j > i && j - i <= K) out[j - i - 1] += p;
            if (i > j && i - j <= K) out[i - j - 1] -= p;
        }
    }
}

}  // namespace pdecert
