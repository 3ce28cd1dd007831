#include "pdecert/enclosure.hpp"

#include <functional>

#include "pdecert/fourier.hpp"

namespace pdecert {

void check_admissible(const Model& m, const VarPair& v) {
    if (!v.u.bounded()) throw AdmissibilityViolation("solution set must have tail exponent > 1");
    if (v.h.C.is_zero()) return;
    const double s2 = v.h.s;
    if (m.kind == ModelKind::Burgers) {
        if (s2 <= 1.0) throw AdmissibilityViolation("Burgers variational set must be bounded");
        return;
    }
    if (s2 > 1.0 || v.u.C.is_zero()) return;
    const double s1 = v.u.s;
    if (s2 <= 0.0 && s1 + s2 <= 1.0) throw AdmissibilityViolation("s1 + s2 <= 1");
    if (s2 > 0.0 && s1 - s2 <= 1.0) throw AdmissibilityViolation("s1 - s2 <= 1");
}

namespace {

using Field = std::function<TailVector(const TimeBox&, const TailVector&)>;

bool dissipative_tail(const Model& m, int n) { return n + 1 >= m.k_dissipative(); }

void pick_tail(const Interval& Cg, double sg, const Interval& Ch, double sh, Interval& C, double& s, bool& ok) {
    if (Cg.is_zero() || Ch.is_zero()) {
        C = Interval(0.0);
        s = std::max(sg, sh);
    } else if (sg > sh) {
        C = Cg, s = sg;
    } else if (sh > sg) {
        C = Ch, s = sh;
    } else {
        auto z = intersect(Cg, Ch);
        s = sg;
        if (!z) {
            ok = false;
            C = hull(Cg, Ch);
        } else {
            C = *z;
        }
    }
}

EnclosureResult validate_core(const Model& m, const TimeBox& box, const TailVector& X0in, const TailVector& Zin,
                              const Field& field) {
    const int n = std::max(X0in.n(), Zin.n());
    if (!dissipative_tail(m, n)) throw std::invalid_argument("head too short: tail modes are not dissipative");
    TailVector X0 = extend_head(X0in, n), Z = extend_head(Zin, n);
    TailVector W = enclosure_set(X0, Z);
    EnclosureResult r;
    r.Z = Z;
    r.tau = box.tau;
    r.Vf = with_head(field(box, W), n);
    const TailVector& Vf = r.Vf;
    const Interval T(0.0, box.tau);
    bool ok = true;

    TailVector Z1 = TailVector::zero(X0.basis, n, X0.s, X0.parity);
    for (long k = 1; k <= n; ++k) {
        if (!X0.allowed(k) && !Vf.allowed(k) && !Z.allowed(k)) continue;
        const Interval lam = m.eigenvalue(k);
        const Interval x = X0.coeff(k), w = W.coeff(k), f = Vf.coeff(k);
        ModeCertificate c;
        c.k = k;
        c.h = T * (lam * w + f);
        c.g = expm1(lam * T) * (x + f / lam);
        auto z = intersect(c.g, c.h);
        if (!z) {
            ok = false;
            c.z = hull(c.g, c.h);
        } else {
            c.z = *z;
        }
        Z1.head[k - 1] = c.z;
        r.modes.push_back(c);
    }

    // tail of the whole set (not of the correction): e^{lambda t} in [0,1] for k > n
    const double gam = m.gamma();
    const Interval F = m.eigen_tail_factor(n), L = m.inverse_eigen_tail_factor(n);
    Interval Ch, Cg, Cd;
    double sh, sg, sd;
    tail_add(F * W.C, W.s - gam, Vf.C, Vf.s, n, Cd, sd);
    tail_add(X0.C, X0.s, T * Cd, sd, n, Ch, sh);
    tail_add(Interval(0.0, 1.0) * X0.C, X0.s, Interval(-1.0, 0.0) * (L * Vf.C), Vf.s + gam, n, Cg, sg);
    r.tail.g = Cg;
    r.tail.h = Ch;
    pick_tail(Cg, sg, Ch, sh, Z1.C, Z1.s, ok);
    r.tail.z = Z1.C;
    Z1.enforce_parity();
    r.Z1 = Z1;
    r.E = enclosure_set(X0, Z1);
    r.validated = ok && vsubset_interior(Z1, Z);
    return r;
}

TailVector inflate(const TailVector& z1, const EnclosureConfig& cfg) {
    const Interval f(-cfg.inflate_low, cfg.inflate);
    return vscale(z1, f);
}

EnclosureResult search(const Model& m, const TimeBox& box, const TailVector& X0, const TailVector* hint,
                       const EnclosureConfig& cfg, const Field& field) {
    TailVector Z;
    if (hint) {
        Z = *hint;
    } else {
        TailVector z0 = TailVector::zero(X0.basis, X0.n(), X0.s, X0.parity);
        z0.C = X0.C;
        Z = inflate(validate_core(m, box, X0, z0, field).Z1, cfg);
    }
    EnclosureResult r;
    for (int it = 0; it <= cfg.max_inflate; ++it) {
        r = validate_core(m, box, X0, Z, field);
        r.attempts = it + 1;
        if (r.validated) return r;
        Z = inflate(r.Z1, cfg);
    }
    return r;
}

// Catches representational failures of a guess so the finder can try a shorter step.
template <class F>
bool attempt(F&& f) {
    try {
        return f();
    } catch (const ExponentNotSummable&) {
        return false;
    } catch (const AdmissibilityViolation&) {
        return false;
    } catch (const std::runtime_error&) {
        return false;
    }
}

}  // namespace

TailVector enclosure_set(const TailVector& X0, const TailVector& Z) {
    const int n = std::max(X0.n(), Z.n());
    TailVector x = extend_head(X0, n), z = extend_head(Z, n);
    TailVector r = vadd(head_part(x, n), head_part(z, n));
    r.C = z.C;
    r.s = z.s;
    r.enforce_parity();
    return r;
}

EnclosureResult validate_enclosure(const Model& m, const TimeBox& box, const PQSet& X0, const TailVector& Z) {
    Field f = [&m](const TimeBox& b, const TailVector& W) { return nonlinearity_bound(m, b, W); };
    return validate_core(m, box, X0, Z, f);
}

EnclosureResult find_enclosure(const Model& m, const TimeBox& box, const PQSet& X0, const TailVector* hint,
                               const EnclosureConfig& cfg) {
    Field f = [&m](const TimeBox& b, const TailVector& W) { return nonlinearity_bound(m, b, W); };
    TailVector last = X0;
    for (double tau = box.tau; tau >= cfg.tau_min; tau *= 0.5) {
        const TimeBox b(box.t0, tau);
        EnclosureResult r;
        bool ok = attempt([&] {
            r = search(m, b, X0, tau == box.tau ? hint : nullptr, cfg, f);
            last = r.Z1;
            return r.validated;
        });
        if (ok) return r;
    }
    throw EnclosureNotFound(last);
}

VarEnclosureResult validate_enclosure_variational(const Model& m, const TimeBox& box, const VarPair& V0,
                                                  const TailVector& Zu, const TailVector& Zh) {
    check_admissible(m, V0);
    VarEnclosureResult r;
    r.tau = box.tau;
    r.u = validate_enclosure(m, box, V0.u, Zu);
    const TailVector Eu = enclosure_set(V0.u, Zu);
    Field f = [&m, &Eu](const TimeBox& b, const TailVector& H) {
        return variational_nonlinearity_bound(m, b, Eu, H);
    };
    r.h = validate_core(m, box, V0.h, Zh, f);
    r.validated = r.u.validated && r.h.validated;
    return r;
}

VarEnclosureResult find_enclosure_variational(const Model& m, const TimeBox& box, const VarPair& V0,
                                              const EnclosureConfig& cfg) {
    check_admissible(m, V0);
    Field fu = [&m](const TimeBox& b, const TailVector& W) { return nonlinearity_bound(m, b, W); };
    TailVector last = V0.h;
    for (double tau = box.tau; tau >= cfg.tau_min; tau *= 0.5) {
        const TimeBox b(box.t0, tau);
        VarEnclosureResult r;
        r.tau = tau;
        bool ok = attempt([&] {
            r.u = search(m, b, V0.u, nullptr, cfg, fu);
            if (!r.u.validated) return false;
            const TailVector Eu = enclosure_set(V0.u, r.u.Z);
            Field fh = [&m, &Eu](const TimeBox& bb, const TailVector& H) {
                return variational_nonlinearity_bound(m, bb, Eu, H);
            };
            r.h = search(m, b, V0.h, nullptr, cfg, fh);
            last = r.h.Z1;
            return r.h.validated;
        });
        if (ok) {
            r.validated = true;
            return r;
        }
    }
    throw EnclosureNotFound(last);
}

}  // namespace pdecert
