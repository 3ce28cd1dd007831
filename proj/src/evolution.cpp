#include "pdecert/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pdecert {

int default_galerkin_modes(const Model& m, int n) {
    switch (m.kind) {
        case ModelKind::ChafeeInfante: return n;
        case ModelKind::Burgers: return n / 2;
        default: return 0;
    }
}

namespace {

double continuous_peak(const Model& m, double tau, double d) {
    if (d <= 0.0) return 0.0;
    if (m.kind == ModelKind::Burgers) {
        const double a2 = 2.0 * m.bu.alpha;
        return std::pow(d / (a2 * tau), 1.0 / a2);
    }
    return std::sqrt(d / (2.0 * tau));
}

double decay_value(const Model& m, long k, double tau, double d) {
    return (pow_real(k, Interval(d)) * exp(Interval(tau) * m.eigenvalue(k))).hi;
}

}  // namespace

double sup_decay(const Model& m, int n, double tau, double d) {
    const long k0 = n + 1;
    double best = decay_value(m, k0, tau, d);
    const double ks = continuous_peak(m, tau, d);
    if (ks > double(k0)) {
        // k^d e^{tau lambda_k} is unimodal in k
        const long lo = std::max(k0, static_cast<long>(std::floor(ks)) - 1);
        for (long k = lo; k <= static_cast<long>(std::ceil(ks)) + 1; ++k) best = std::max(best, decay_value(m, k, tau, d));
    }
    return best;
}

double sup_duhamel(const Model& m, int n, double tau, double d) {
    const double gam = m.gamma();
    if (d > gam) throw std::domain_error("Duhamel factor unbounded for d > gamma");
    const Interval T(tau), D(d);
    double best = 0.0;
    long k = n + 1;
    for (;; ++k) {
        const Interval lam = m.eigenvalue(k);
        if ((-lam * T).lo >= 3.0 || k > 50000000) break;
        best = std::max(best, (pow_real(k, D) * expm1_div(lam, T)).hi);
    }
    // k >= K: k^d (1 - e^{-tau mu})/mu <= k^{d-gamma} k^gamma/mu_k <= K^{d-gamma} |L|
    const Interval L = m.inverse_eigen_tail_factor(static_cast<int>(k - 1));
    best = std::max(best, (pow_real(k, D - Interval(gam)) * Interval(L.mag())).hi);
    return best;
}

namespace {

struct StepFailed : std::runtime_error {
    StepFailed() : std::runtime_error("differential inclusion enclosure failed") {}
};

void duhamel_tail(const Model& m, int n, double tau, const TailVector& X, const TailVector& V2, double head_mag,
                  const EvolutionConfig& cfg, Interval& C, double& s) {
    const bool xz = X.C.is_zero(), fz = V2.C.is_zero();
    if (xz && fz) {
        C = Interval(0.0);
        s = X.s;
        return;
    }
    const double inf = std::numeric_limits<double>::infinity();
    const double cap = fz ? inf : V2.s + m.gamma();
    const double base = std::min(X.s, cap);
    double top = std::min(base + 2.0, cap);
    if (top > cfg.s_max) top = std::max(base, cfg.s_max);
    std::vector<double> cand{top};
    if ((top + base) / 2 != top) cand.push_back((top + base) / 2);
    if (base != cand.back()) cand.push_back(base);
    for (double sn : cand) {
        Interval c(0.0);
        if (!xz) c += Interval(0.0, sup_decay(m, n, tau, sn - X.s)) * X.C;
        if (!fz) c += Interval(0.0, sup_duhamel(m, n, tau, sn - V2.s)) * V2.C;
        C = c;
        s = sn;
        if (sn == base || c.mag() <= cfg.raise_factor * head_mag) return;
    }
}

// Duhamel bound e^{tau lambda} X + (e^{tau lambda} - 1)/lambda V2 on all modes.
TailVector duhamel(const Model& m, double tau, const TailVector& X, const TailVector& V2in, const EvolutionConfig& cfg) {
    const int n = X.n();
    TailVector V2 = with_head(V2in, n);
    TailVector r = TailVector::zero(Basis::Sine, n, X.s, X.parity);
    const Interval T(tau);
    for (long k = 1; k <= n; ++k) {
        if (!X.allowed(k) && !V2.allowed(k)) continue;
        const Interval lam = m.eigenvalue(k);
        r.head[k - 1] = exp(T * lam) * X.coeff(k) + expm1_div(lam, T) * V2.coeff(k);
    }
    r.enforce_parity();
    duhamel_tail(m, n, tau, X, V2, head_max_mag(r), cfg, r.C, r.s);
    return r;
}

IVec head_of(const TailVector& a, int mm) {
    IVec v(mm);
    for (int i = 0; i < mm; ++i) v[i] = a.coeff(i + 1);
    return v;
}

bool inside(const IVec& a, const IVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (!((a[i].is_zero() && b[i].is_zero()) || subset_interior(a[i], b[i]))) return false;
    return true;
}

IVec inflate(const IVec& y, const IVec& d, double c, double low) {
    IVec r(y.size());
    const Interval f(-low, c);
    for (size_t i = 0; i < y.size(); ++i) r[i] = y[i] + f * d[i];
    return r;
}

// Box E with Y + [0,tau] F(E) inside int E.
template <class Field>
IVec rough_enclosure(const IVec& Y, double tau, const Field& F, const EvolutionConfig& cfg) {
    const Interval T(0.0, tau);
    IVec E = inflate(Y, vscale(F(Y), T), cfg.enclosure.inflate, cfg.enclosure.inflate_low);
    for (int it = 0; it < cfg.max_rough_iter; ++it) {
        IVec step = vscale(F(E), T);
        IVec E1 = vadd(Y, step);
        if (inside(E1, E)) return E1;
        E = inflate(Y, step, cfg.enclosure.inflate, cfg.enclosure.inflate_low);
    }
    throw StepFailed();
}

IMat propagator_bound(const IMat& J, double tau) {
    IMat M = fundamental_bound(J, tau);
    IMat alt = IMat::identity(J.rows) + Interval(0.0, tau) * (J * M);
    return intersect(M, alt);
}

IVec operator+(const IVec& a, const IVec& b) { return vadd(a, b); }
IVec operator*(const Interval& c, const IVec& a) { return vscale(a, c); }

template <class T>
T taylor_sum(const std::vector<T>& c, const T& rem, double tau, int p) {
    // Horner form: sum_{k<=p} c_k tau^k + rem tau^{p+1}
    const Interval h(tau);
    T acc = rem;
    for (int k = p; k >= 0; --k) {
        acc = h * acc;
        acc = acc + c[k];
    }
    return acc;
}

struct GalerkinBlock {
    int mm = 0;
    IVec Eg;
    IMat J;
    IMat W;
    IMat Dphi;
    IVec x;
};

// Head modes 1..mm of the solution through the Galerkin flow plus the tail perturbation.
GalerkinBlock galerkin_block(const Model& m, const TimeBox& box, const TailVector& X, const TailVector& E, int mm,
                             const EvolutionConfig& cfg) {
    GalerkinBlock g;
    g.mm = mm;
    const double tau = box.tau;
    const Interval T = box.range(), t0(box.t0);
    const int p = cfg.taylor_order;
    const IVec Y = head_of(E, mm), X0 = head_of(X, mm), xbar = midpoint(X0);
    g.Eg = rough_enclosure(Y, tau, [&](const IVec& e) { return galerkin_field(m, T, e); }, cfg);

    auto xs = galerkin_taylor(m, t0, xbar, p);
    IVec xr = galerkin_taylor(m, T, g.Eg, p + 1)[p + 1];
    IVec phi = taylor_sum(xs, xr, tau, p);

    g.J = galerkin_jacobian(m, T, g.Eg);
    g.W = propagator_bound(g.J, tau);
    auto XS = galerkin_taylor(m, t0, X0, std::max(p - 1, 0));
    auto V = variational_taylor(m, t0, XS, IMat::identity(mm), p);
    auto XE = galerkin_taylor(m, T, g.Eg, p);
    IMat VE = variational_taylor(m, T, XE, g.W, p + 1)[p + 1];
    g.Dphi = taylor_sum(V, VE, tau, p);

    TailVector Pfull = galerkin_remainder_bound(m, box, E, mm);
    IVec P = head_of(Pfull, mm);
    g.x = phi + g.Dphi * vsub(X0, xbar) + Interval(tau) * (g.W * P);
    return g;
}

StepDiagnostics diagnostics(const TimeBox& box, const TailVector& in, const TailVector& out, int attempts) {
    StepDiagnostics d;
    d.t0 = box.t0;
    d.tau = box.tau;
    for (const auto& x : out.head) d.max_head_width = std::max(d.max_head_width, x.width());
    d.tail_C = out.C;
    d.s_in = in.s;
    d.s_out = out.s;
    d.enclosure_attempts = attempts;
    return d;
}

void merge_head(TailVector& out, const IVec& g) {
    for (size_t i = 0; i < g.size(); ++i) {
        if (!out.allowed(i + 1)) continue;
        auto z = intersect(out.head[i], g[i]);
        if (!z) throw std::runtime_error("empty intersection of head bounds");
        out.head[i] = *z;
    }
}

int block_size(const Model& m, const EvolutionConfig& cfg, int n) {
    int mm = cfg.galerkin_modes >= 0 ? cfg.galerkin_modes : default_galerkin_modes(m, n);
    return std::clamp(mm, 0, n);
}

}  // namespace

StepReport step(const Model& m, const TimeBox& box, const PQSet& X, const EvolutionConfig& cfg) {
    if (!X.bounded()) throw ExponentNotSummable();
    const int mm = block_size(m, cfg, X.n());
    for (double tau = box.tau;; tau *= 0.5) {
        if (tau < cfg.enclosure.tau_min) throw EnclosureNotFound(X);
        EnclosureResult enc = find_enclosure(m, TimeBox(box.t0, tau), X, nullptr, cfg.enclosure);
        const TimeBox b(box.t0, enc.tau);
        StepReport r;
        r.input = X;
        r.tau = enc.tau;
        r.enclosure = enc.E;
        TailVector V2 = nonlinearity_bound(m, b, r.enclosure);
        r.output = duhamel(m, b.tau, X, V2, cfg);
        if (mm > 0) {
            try {
                GalerkinBlock g = galerkin_block(m, b, X, r.enclosure, mm, cfg);
                merge_head(r.output, g.x);
            } catch (const StepFailed&) {
                tau = enc.tau;
                continue;
            }
        }
        r.diag = diagnostics(b, X, r.output, enc.attempts);
        return r;
    }
}

VarStepReport step_variational(const Model& m, const TimeBox& box, const VarPair& V, const EvolutionConfig& cfg) {
    check_admissible(m, V);
    const int n = std::max(V.u.n(), V.h.n());
    const TailVector U = extend_head(V.u, n), H = extend_head(V.h, n);
    const int mm = block_size(m, cfg, n);
    for (double tau = box.tau;; tau *= 0.5) {
        if (tau < cfg.enclosure.tau_min) throw EnclosureNotFound(H);
        VarEnclosureResult enc = find_enclosure_variational(m, TimeBox(box.t0, tau), {U, H}, cfg.enclosure);
        const TimeBox b(box.t0, enc.tau);
        VarStepReport r;
        r.u.input = U;
        r.h.input = H;
        r.u.tau = r.h.tau = enc.tau;
        r.u.enclosure = enc.u.E;
        r.h.enclosure = enc.h.E;
        TailVector V2u = nonlinearity_bound(m, b, r.u.enclosure);
        TailVector V2h = variational_nonlinearity_bound(m, b, r.u.enclosure, r.h.enclosure);
        r.u.output = duhamel(m, b.tau, U, V2u, cfg);
        r.h.output = duhamel(m, b.tau, H, V2h, cfg);
        if (mm > 0) {
            try {
                GalerkinBlock g = galerkin_block(m, b, U, r.u.enclosure, mm, cfg);
                merge_head(r.u.output, g.x);
                // coupled (x, h) Galerkin system with Jacobian [[J, 0], [K, J]]
                const IVec Yh = head_of(r.h.enclosure, mm), H0 = head_of(H, mm);
                IVec Egh = rough_enclosure(Yh, b.tau, [&](const IVec& e) { return g.J * e; }, cfg);
                IMat K = galerkin_second(m, b.range(), g.Eg, Egh);
                IMat Jc(2 * mm, 2 * mm);
                for (int i = 0; i < mm; ++i)
                    for (int j = 0; j < mm; ++j) {
                        Jc(i, j) = g.J(i, j);
                        Jc(mm + i, mm + j) = g.J(i, j);
                        Jc(mm + i, j) = K(i, j);
                    }
                IMat Wc = propagator_bound(Jc, b.tau);
                IVec Px = head_of(galerkin_remainder_bound(m, b, r.u.enclosure, mm), mm);
                IVec Ph = head_of(variational_remainder_bound(m, b, r.u.enclosure, r.h.enclosure, mm), mm);
                IVec P(2 * mm);
                for (int i = 0; i < mm; ++i) P[i] = Px[i], P[mm + i] = Ph[i];
                IVec pert = Wc * P;
                IVec hx = g.Dphi * H0;
                for (int i = 0; i < mm; ++i) hx[i] += Interval(b.tau) * pert[mm + i];
                merge_head(r.h.output, hx);
            } catch (const StepFailed&) {
                tau = enc.tau;
                continue;
            }
        }
        r.u.diag = diagnostics(b, U, r.u.output, enc.u.attempts);
        r.h.diag = diagnostics(b, H, r.h.output, enc.h.attempts);
        return r;
    }
}

namespace {

template <class State, class Stepper, class Record>
void run_steps(double t0, double t1, int n_steps, State& s, const Stepper& stepper, const Record& record) {
    if (n_steps < 1) throw std::invalid_argument("n_steps must be positive");
    if (!(t1 > t0)) throw std::invalid_argument("t1 must exceed t0");
    for (int i = 0; i < n_steps; ++i) {
        const double a = t0 + (t1 - t0) * i / n_steps;
        const double e = i + 1 == n_steps ? t1 : t0 + (t1 - t0) * (i + 1) / n_steps;
        double t = a;
        while (t < e) {
            const double want = e - t;
            double tau = stepper(s, TimeBox(t, want));
            // steps must tile the time axis exactly
            double tn = tau == want ? e : t + tau;
            if (tn - t != tau) throw std::runtime_error("time step not representable");
            record();
            t = tn;
        }
    }
}

}  // namespace

IntegrationReport integrate(const Model& m, double t0, double t1, const PQSet& X, int n_steps,
                            const EvolutionConfig& cfg, const StepObserver& obs) {
    IntegrationReport rep;
    rep.input = X;
    rep.t0 = t0;
    rep.t1 = t1;
    TailVector cur = X;
    StepDiagnostics last;
    run_steps(
        t0, t1, n_steps, cur,
        [&](TailVector& s, const TimeBox& b) {
            StepReport r = step(m, b, s, cfg);
            s = r.output;
            last = r.diag;
            return r.tau;
        },
        [&] {
            rep.diag.push_back(last);
            ++rep.steps;
            if (obs) obs(last, nullptr);
        });
    rep.output = cur;
    return rep;
}

VarIntegrationReport integrate_variational(const Model& m, double t0, double t1, const VarPair& V, int n_steps,
                                           const EvolutionConfig& cfg, const StepObserver& obs) {
    VarIntegrationReport rep;
    rep.input = V;
    rep.t0 = t0;
    rep.t1 = t1;
    VarPair cur = V;
    StepDiagnostics du, dh;
    run_steps(
        t0, t1, n_steps, cur,
        [&](VarPair& s, const TimeBox& b) {
            VarStepReport r = step_variational(m, b, s, cfg);
            s = {r.u.output, r.h.output};
            du = r.u.diag;
            dh = r.h.diag;
            return r.u.tau;
        },
        [&] {
            rep.diag_u.push_back(du);
            rep.diag_h.push_back(dh);
            ++rep.steps;
            if (obs) obs(du, &dh);
        });
    rep.output = cur;
    return rep;
}

}  // namespace pdecert
