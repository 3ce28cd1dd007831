#include "pdecert/models.hpp"

#include <algorithm>
#include <cmath>

#include "pdecert/fourier.hpp"

namespace pdecert {

TimeBox::TimeBox(double t, double dt) : t0(t), tau(dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
}

Interval TimeBox::range() const { return Interval(t0, rnd::add_up(t0, tau)); }

Model Model::chafee(const ChafeeInfanteParams& p) {
    Model m;
    m.kind = ModelKind::ChafeeInfante;
    m.ci = p;
    return m;
}

Model Model::burgers(const BurgersParams& p) {
    if (!(p.alpha > 0.5 && p.alpha <= 1.0)) throw std::invalid_argument("alpha must lie in (1/2, 1]");
    Model m;
    m.kind = ModelKind::Burgers;
    m.bu = p;
    return m;
}

Model Model::linear(const LinearParams& p) {
    Model m;
    m.kind = ModelKind::Linear;
    m.lin = p;
    return m;
}

std::string Model::name() const {
    switch (kind) {
        case ModelKind::ChafeeInfante: return "chafee_infante";
        case ModelKind::Burgers: return "burgers";
        default: return "linear";
    }
}

Parity Model::parity() const {
    return kind == ModelKind::ChafeeInfante && ci.odd_subspace ? Parity::Odd : Parity::None;
}

Interval Model::eigenvalue(long k) const {
    if (k < 1) throw std::invalid_argument("eigenvalue index must be positive");
    Interval kk = Interval(double(k)) * Interval(double(k));
    Interval r;
    switch (kind) {
        case ModelKind::ChafeeInfante: r = Interval(ci.lambda) - kk; break;
        case ModelKind::Burgers: r = -pow_real(k, Interval(2.0 * bu.alpha)); break;
        default: r = Interval(lin.shift) - kk; break;
    }
    if (r.contains_zero()) throw EigenvalueContainsZero();
    return r;
}

long Model::k_dissipative() const {
    double shift = kind == ModelKind::ChafeeInfante ? ci.lambda : kind == ModelKind::Linear ? lin.shift : 0.0;
    if (shift < 1.0) return 1;
    return static_cast<long>(std::floor(std::sqrt(shift))) + 1;
}

double Model::gamma() const { return kind == ModelKind::Burgers ? 2.0 * bu.alpha : 2.0; }

double Model::derivative_loss() const { return kind == ModelKind::Burgers ? 1.0 : 0.0; }

Interval Model::inverse_eigen_tail_factor(int n) const {
    if (kind == ModelKind::Burgers) return Interval(-1.0);
    double shift = kind == ModelKind::ChafeeInfante ? ci.lambda : lin.shift;
    // 1/(shift - k^2) = -(k^2/(k^2 - shift)) / k^2, the ratio is monotone in k and tends to 1
    Interval k2 = Interval(double(n + 1)) * Interval(double(n + 1));
    Interval den = k2 - Interval(shift);
    if (!(den.lo > 0.0)) throw EigenvalueContainsZero();
    Interval r = k2 / den;
    return -hull(r, Interval(1.0));
}

Interval Model::eigen_tail_factor(int n) const {
    if (kind == ModelKind::Burgers) return Interval(-1.0);
    double shift = kind == ModelKind::ChafeeInfante ? ci.lambda : lin.shift;
    Interval k2 = Interval(double(n + 1)) * Interval(double(n + 1));
    return hull(Interval(shift) / k2 - Interval(1.0), Interval(-1.0));
}

namespace {

void time_coeff_params(const Model& m, double& A, double& B) {
    A = B = 0.0;
    if (m.kind == ModelKind::ChafeeInfante) {
        A = m.ci.b_amp;
        B = m.ci.b_off;
    } else if (m.kind == ModelKind::Burgers) {
        A = m.bu.g_amp;
        B = m.bu.g_off;
    }
}

Interval two_pi() { return Interval(2.0) * pi(); }

}  // namespace

Interval Model::time_coeff(const Interval& t) const {
    double A, B;
    time_coeff_params(*this, A, B);
    if (A == 0.0) return Interval(B);
    return Interval(A) * sin(two_pi() * t) + Interval(B);
}

IVec Model::time_coeff_taylor(const Interval& t, int p) const {
    double A, B;
    time_coeff_params(*this, A, B);
    IVec c(p + 1, Interval(0.0));
    c[0] = time_coeff(t);
    if (A == 0.0) return c;
    const Interval w = two_pi(), half_pi = pi() * Interval(0.5), arg = w * t;
    Interval f(A);
    for (int k = 1; k <= p; ++k) {
        f = f * w / Interval(double(k));
        c[k] = f * sin(arg + Interval(double(k)) * half_pi);
    }
    return c;
}

Interval time_coeff_bound(const Model& m, const TimeBox& box) { return m.time_coeff(box.range()); }

namespace {

TailVector forcing_vector(const Interval& g, int n, double s) {
    TailVector r = TailVector::zero(Basis::Sine, std::max(n, 1), s);
    r.head[0] = g;
    return r;
}

TailVector zero_like(const TailVector& X) {
    return TailVector::zero(Basis::Sine, X.n(), std::max(X.s, 2.0), X.parity);
}

}  // namespace

TailVector nonlinearity_bound(const Model& m, const TimeBox& box, const TailVector& X) {
    if (!X.bounded()) throw ExponentNotSummable();
    const int n = X.n();
    switch (m.kind) {
        case ModelKind::ChafeeInfante: {
            Interval b = time_coeff_bound(m, box);
            TailVector cube = conv_cos_sin(conv_sin_sin(X, X), X);
            return with_head(vscale(cube, -b), n);
        }
        case ModelKind::Burgers: {
            Interval g = time_coeff_bound(m, box);
            TailVector d = vscale(d_dx(conv_sin_sin(X, X)), Interval(m.bu.nu));
            d = with_head(d, n);
            return vadd(d, forcing_vector(g, n, d.s));
        }
        default: return zero_like(X);
    }
}

TailVector galerkin_remainder_bound(const Model& m, const TimeBox& box, const TailVector& X, int mm) {
    const int n = X.n();
    TailVector v = head_part(X, mm), w = tail_part(X, mm);
    TailVector v2w = vadd(vscale(v, 2.0), w);
    switch (m.kind) {
        case ModelKind::ChafeeInfante: {
            // u^3 - v^3 = w (u^2 + v (2v + w)) with u = v + w
            Interval b = time_coeff_bound(m, box);
            TailVector q = vadd(conv_sin_sin(X, X), conv_sin_sin(v, v2w));
            return with_head(vscale(conv_cos_sin(q, w), -b), n);
        }
        case ModelKind::Burgers: {
            TailVector d = d_dx(conv_sin_sin(w, v2w));
            return with_head(vscale(d, Interval(m.bu.nu)), n);
        }
        default: return zero_like(X);
    }
}

TailVector variational_nonlinearity_bound(const Model& m, const TimeBox& box, const TailVector& U,
                                          const TailVector& H) {
    const int n = std::max(U.n(), H.n());
    switch (m.kind) {
        case ModelKind::ChafeeInfante: {
            Interval b = time_coeff_bound(m, box);
            TailVector r = conv_cos_sin_any(conv_sin_sin(U, U), H);
            return with_head(vscale(r, Interval(-3.0) * b), n);
        }
        case ModelKind::Burgers: {
            TailVector r = d_dx(conv_sin_sin(U, H));
            return with_head(vscale(r, Interval(2.0 * m.bu.nu)), n);
        }
        default: {
            TailVector r = TailVector::zero(Basis::Sine, n, H.s, H.parity);
            return r;
        }
    }
}

TailVector variational_remainder_bound(const Model& m, const TimeBox& box, const TailVector& U, const TailVector& H,
                                       int mm) {
    const int n = std::max(U.n(), H.n());
    TailVector v = head_part(U, mm), w = tail_part(U, mm);
    TailVector hv = head_part(H, mm), hw = tail_part(H, mm);
    switch (m.kind) {
        case ModelKind::ChafeeInfante: {
            // u^2 h - v^2 h_v = u^2 h_w + w (2v + w) h_v
            Interval b = time_coeff_bound(m, box);
            TailVector a = conv_cos_sin_any(conv_sin_sin(U, U), hw);
            TailVector c = conv_cos_sin_any(conv_sin_sin(w, vadd(vscale(v, 2.0), w)), hv);
            return with_head(vscale(vadd(with_head(a, n), with_head(c, n)), Interval(-3.0) * b), n);
        }
        case ModelKind::Burgers: {
            TailVector a = conv_sin_sin(U, hw), c = conv_sin_sin(w, hv);
            int k = std::max(a.n(), c.n());
            TailVector r = d_dx(vadd(with_head(a, k), with_head(c, k)));
            return with_head(vscale(r, Interval(2.0 * m.bu.nu)), n);
        }
        default: return TailVector::zero(Basis::Sine, n, H.s, H.parity);
    }
}

// ---- Galerkin system ----

namespace {

IVec eigen_vector(const Model& m, int mm) {
    IVec L(mm);
    for (int i = 0; i < mm; ++i) L[i] = m.eigenvalue(i + 1);
    return L;
}

void add_to(IVec& a, const IVec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (!b[i].is_zero()) a[i] += b[i];
}

// -k sq_k for the sine modes 1..m of d/dx of a cosine array
IVec ddx_cos(const IVec& c, int mm) {
    IVec r(mm, Interval(0.0));
    for (int k = 1; k <= mm && k < static_cast<int>(c.size()); ++k) r[k - 1] = Interval(-double(k)) * c[k];
    return r;
}

IVec unit_vec(int mm, int j) {
    IVec e(mm, Interval(0.0));
    e[j] = Interval(1.0);
    return e;
}

}  // namespace

IVec galerkin_field(const Model& m, const Interval& t, const IVec& x) {
    const int mm = static_cast<int>(x.size());
    IVec r(mm);
    for (int i = 0; i < mm; ++i) r[i] = m.eigenvalue(i + 1) * x[i];
    if (m.kind == ModelKind::ChafeeInfante) {
        IVec sq, cube;
        galerkin_sin_sin(x, x, 2 * mm, sq);
        galerkin_cos_sin(sq, x, mm, cube);
        add_to(r, vscale(cube, -m.time_coeff(t)));
    } else if (m.kind == ModelKind::Burgers) {
        IVec sq;
        galerkin_sin_sin(x, x, mm, sq);
        add_to(r, vscale(ddx_cos(sq, mm), Interval(m.bu.nu)));
        r[0] += m.time_coeff(t);
    }
    return r;
}

std::vector<IVec> galerkin_taylor(const Model& m, const Interval& t, const IVec& x0, int p) {
    const int mm = static_cast<int>(x0.size());
    const IVec L = eigen_vector(m, mm);
    const IVec c = m.time_coeff_taylor(t, p);
    std::vector<IVec> x{x0}, sq, cube;
    for (int k = 0; k < p; ++k) {
        IVec N(mm, Interval(0.0));
        if (m.kind != ModelKind::Linear) {
            const int K = m.kind == ModelKind::ChafeeInfante ? 2 * mm : mm;
            IVec s(K + 1, Interval(0.0)), tmp;
            for (int a = 0; a <= k; ++a) {
                galerkin_sin_sin(x[a], x[k - a], K, tmp);
                add_to(s, tmp);
            }
            sq.push_back(s);
            if (m.kind == ModelKind::ChafeeInfante) {
                IVec cu(mm, Interval(0.0));
                for (int a = 0; a <= k; ++a) {
                    galerkin_cos_sin(sq[a], x[k - a], mm, tmp);
                    add_to(cu, tmp);
                }
                cube.push_back(cu);
                for (int a = 0; a <= k; ++a) add_to(N, vscale(cube[k - a], -c[a]));
            } else {
                N = vscale(ddx_cos(s, mm), Interval(m.bu.nu));
                N[0] += c[k];
            }
        }
        IVec next(mm);
        const Interval inv = Interval(1.0) / Interval(double(k + 1));
        for (int i = 0; i < mm; ++i) next[i] = (L[i] * x[k][i] + N[i]) * inv;
        x.push_back(std::move(next));
    }
    return x;
}

namespace {

// Taylor coefficients (in time) of the operator h -> Df(t, x(t)) h, applied to a column.
struct DfSeries {
    const Model& m;
    int mm;
    std::vector<IVec> w;  // Chafee: cosine coefficients of b(t) x(t)^2; Burgers: x itself

    DfSeries(const Model& model, const Interval& t, const std::vector<IVec>& xs, int q_max)
        : m(model), mm(static_cast<int>(xs[0].size())) {
        if (m.kind == ModelKind::ChafeeInfante) {
            const IVec c = m.time_coeff_taylor(t, q_max);
            std::vector<IVec> sq;
            IVec tmp;
            for (int q = 0; q <= q_max; ++q) {
                IVec s(2 * mm + 1, Interval(0.0));
                for (int a = 0; a <= q; ++a) {
                    galerkin_sin_sin(xs[a], xs[q - a], 2 * mm, tmp);
                    add_to(s, tmp);
                }
                sq.push_back(s);
                IVec wq(2 * mm + 1, Interval(0.0));
                for (int a = 0; a <= q; ++a) add_to(wq, vscale(sq[q - a], c[a]));
                w.push_back(wq);
            }
        } else if (m.kind == ModelKind::Burgers) {
            for (int q = 0; q <= q_max; ++q) w.push_back(xs[q]);
        }
    }

    IVec apply(int q, const IVec& h) const {
        IVec r;
        if (m.kind == ModelKind::ChafeeInfante) {
            galerkin_cos_sin(w[q], h, mm, r);
            return vscale(r, Interval(-3.0));
        }
        if (m.kind == ModelKind::Burgers) {
            IVec sq;
            galerkin_sin_sin(w[q], h, mm, sq);
            return vscale(ddx_cos(sq, mm), Interval(2.0 * m.bu.nu));
        }
        return IVec(mm, Interval(0.0));
    }
};

}  // namespace

std::vector<IMat> variational_taylor(const Model& m, const Interval& t, const std::vector<IVec>& xs, const IMat& V0,
                                     int p) {
    const int mm = V0.rows;
    const IVec L = eigen_vector(m, mm);
    DfSeries df(m, t, xs, std::max(p - 1, 0));
    std::vector<IMat> V{V0};
    for (int k = 0; k < p; ++k) {
        IMat next(mm, V0.cols);
        const Interval inv = Interval(1.0) / Interval(double(k + 1));
        for (int j = 0; j < V0.cols; ++j) {
            IVec col(mm);
            IVec vk = V[k].column(j);
            for (int i = 0; i < mm; ++i) col[i] = L[i] * vk[i];
            if (m.kind != ModelKind::Linear)
                for (int q = 0; q <= k; ++q) add_to(col, df.apply(q, V[k - q].column(j)));
            next.set_column(j, vscale(col, inv));
        }
        V.push_back(std::move(next));
    }
    return V;
}

IMat galerkin_jacobian(const Model& m, const Interval& t, const IVec& x) {
    const int mm = static_cast<int>(x.size());
    DfSeries df(m, t, {x}, 0);
    IMat J(mm, mm);
    for (int j = 0; j < mm; ++j) {
        IVec col = m.kind == ModelKind::Linear ? IVec(mm, Interval(0.0)) : df.apply(0, unit_vec(mm, j));
        col[j] += m.eigenvalue(j + 1);
        J.set_column(j, col);
    }
    return J;
}

IMat galerkin_second(const Model& m, const Interval& t, const IVec& x, const IVec& h) {
    const int mm = static_cast<int>(x.size());
    IMat K(mm, mm);
    if (m.kind == ModelKind::Linear) return K;
    IVec sq, col;
    if (m.kind == ModelKind::ChafeeInfante) {
        // d/dx (-3b x^2 h) along e_j is -6b (x h) e_j
        galerkin_sin_sin(x, h, 2 * mm, sq);
        const Interval f = Interval(-6.0) * m.time_coeff(t);
        for (int j = 0; j < mm; ++j) {
            galerkin_cos_sin(sq, unit_vec(mm, j), mm, col);
            K.set_column(j, vscale(col, f));
        }
    } else {
        for (int j = 0; j < mm; ++j) {
            galerkin_sin_sin(unit_vec(mm, j), h, mm, sq);
            K.set_column(j, vscale(ddx_cos(sq, mm), Interval(2.0 * m.bu.nu)));
        }
    }
    return K;
}

}  // namespace pdecert
