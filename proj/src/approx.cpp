#include "pdecert/approx.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace pdecert {

namespace {

// Collocation on x_j = j pi / N, j = 1..N-1; with N = 3n + 2 cubic products of n modes are not aliased.
struct Grid {
    int n = 0, N = 0;
    Eigen::MatrixXd S;  // S(j, k) = sin((k+1) x_j)
    Eigen::MatrixXd Cd; // Cd(j, k) = (k+1) cos((k+1) x_j)
};

const Grid& grid(int n) {
    thread_local Grid g;
    if (g.n != n) {
        g.n = n;
        g.N = 3 * n + 2;
        g.S.resize(g.N - 1, n);
        g.Cd.resize(g.N - 1, n);
        for (int j = 1; j < g.N; ++j) {
            const double x = std::numbers::pi * j / g.N;
            for (int k = 1; k <= n; ++k) {
                g.S(j - 1, k - 1) = std::sin(k * x);
                g.Cd(j - 1, k - 1) = k * std::cos(k * x);
            }
        }
    }
    return g;
}

double time_coeff(const Model& m, double t) {
    const double w = 2.0 * std::numbers::pi * t;
    switch (m.kind) {
        case ModelKind::ChafeeInfante: return m.ci.b_amp * std::sin(w) + m.ci.b_off;
        case ModelKind::Burgers: return m.bu.g_amp * std::sin(w) + m.bu.g_off;
        default: return 0.0;
    }
}

std::vector<double> eigenvalues(const Model& m, int n) {
    std::vector<double> l(n);
    for (int k = 1; k <= n; ++k) {
        switch (m.kind) {
            case ModelKind::ChafeeInfante: l[k - 1] = m.ci.lambda - double(k) * k; break;
            case ModelKind::Burgers: l[k - 1] = -std::pow(double(k), 2.0 * m.bu.alpha); break;
            default: l[k - 1] = m.lin.shift - double(k) * k; break;
        }
    }
    return l;
}

Eigen::VectorXd field(const Model& m, double t, const Eigen::VectorXd& x, const std::vector<double>& lam) {
    const int n = static_cast<int>(x.size());
    Eigen::VectorXd r(n);
    for (int k = 0; k < n; ++k) r[k] = lam[k] * x[k];
    if (m.kind == ModelKind::Linear) return r;
    const Grid& g = grid(n);
    const Eigen::VectorXd u = g.S * x;
    Eigen::VectorXd v;
    if (m.kind == ModelKind::ChafeeInfante) {
        v = -time_coeff(m, t) * u.array().cube().matrix();
    } else {
        // (u^2)_x = 2 u u_x
        v = (2.0 * m.bu.nu) * (u.array() * (g.Cd * x).array()).matrix();
    }
    r += (2.0 / g.N) * (g.S.transpose() * v);
    if (m.kind == ModelKind::Burgers) r[0] += time_coeff(m, t);
    return r;
}

Eigen::VectorXd to_eigen(const Coeffs& c, int n) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n && i < static_cast<int>(c.size()); ++i) v[i] = c[i];
    return v;
}

Coeffs from_eigen(const Eigen::VectorXd& v) { return Coeffs(v.data(), v.data() + v.size()); }

struct Rk4 {
    const Model& m;
    std::vector<double> lam;
    Rk4(const Model& mm, int n) : m(mm), lam(eigenvalues(mm, n)) {}

    void advance(double t0, double t1, double dt, Eigen::VectorXd& x) const {
        const long steps = std::max(1L, static_cast<long>(std::ceil((t1 - t0) / dt - 1e-9)));
        const double h = (t1 - t0) / steps;
        for (long i = 0; i < steps; ++i) {
            const double t = t0 + i * h;
            const Eigen::VectorXd k1 = field(m, t, x, lam);
            const Eigen::VectorXd k2 = field(m, t + h / 2, x + (h / 2) * k1, lam);
            const Eigen::VectorXd k3 = field(m, t + h / 2, x + (h / 2) * k2, lam);
            const Eigen::VectorXd k4 = field(m, t + h, x + h * k3, lam);
            x += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
            if (!(x.cwiseAbs().maxCoeff() <= 1e6)) throw BlowUpDetected();
        }
    }
};

Eigen::VectorXd time1(const Model& m, const Eigen::VectorXd& u, const SpectralOptions& opt) {
    Eigen::VectorXd x = u;
    Rk4(m, static_cast<int>(u.size())).advance(0.0, 1.0, opt.dt, x);
    return x;
}

Eigen::MatrixXd jacobian(const Model& m, const Eigen::VectorXd& u, double eps, const SpectralOptions& opt) {
    const int n = static_cast<int>(u.size());
    Eigen::MatrixXd J(n, n);
    for (int j = 0; j < n; ++j) {
        Eigen::VectorXd a = u, b = u;
        a[j] += eps;
        b[j] -= eps;
        J.col(j) = (time1(m, a, opt) - time1(m, b, opt)) / (2 * eps);
    }
    return J;
}

}  // namespace

Coeffs spectral_field(const Model& m, double t, const Coeffs& x) {
    const int n = static_cast<int>(x.size());
    return from_eigen(field(m, t, to_eigen(x, n), eigenvalues(m, n)));
}

Coeffs spectral_integrate(const Model& m, double t0, double t1, const Coeffs& u0, const SpectralOptions& opt) {
    Eigen::VectorXd x = to_eigen(u0, opt.n_modes);
    Rk4(m, opt.n_modes).advance(t0, t1, opt.dt, x);
    return from_eigen(x);
}

std::vector<Coeffs> spectral_trajectory(const Model& m, double t0, double t1, const Coeffs& u0, int n_samples,
                                        const SpectralOptions& opt) {
    if (n_samples < 1) throw std::invalid_argument("n_samples must be positive");
    Eigen::VectorXd x = to_eigen(u0, opt.n_modes);
    Rk4 rk(m, opt.n_modes);
    std::vector<Coeffs> out{from_eigen(x)};
    for (int j = 0; j < n_samples; ++j) {
        const double a = t0 + (t1 - t0) * j / n_samples, b = t0 + (t1 - t0) * (j + 1) / n_samples;
        rk.advance(a, b, opt.dt, x);
        out.push_back(from_eigen(x));
    }
    return out;
}

double time1_defect(const Model& m, const Coeffs& u, const SpectralOptions& opt) {
    const Eigen::VectorXd x = to_eigen(u, opt.n_modes);
    return (time1(m, x, opt) - x).cwiseAbs().maxCoeff();
}

std::vector<Coeffs> time1_jacobian(const Model& m, const Coeffs& u, double eps, const SpectralOptions& opt) {
    const Eigen::MatrixXd J = jacobian(m, to_eigen(u, opt.n_modes), eps, opt);
    std::vector<Coeffs> cols;
    for (int j = 0; j < J.cols(); ++j) cols.push_back(from_eigen(J.col(j)));
    return cols;
}

Coeffs find_periodic_candidate(const Model& m, const CandidateOptions& opt) {
    const int n = opt.spectral.n_modes;
    Eigen::VectorXd x = opt.initial.empty() ? Eigen::VectorXd::Unit(n, 0) : to_eigen(opt.initial, n);
    for (int it = 0; it < opt.max_iter; ++it) {
        const Eigen::VectorXd y = time1(m, x, opt.spectral);
        const double d = (y - x).cwiseAbs().maxCoeff();
        if (d < opt.tol) return from_eigen(x);
        if (opt.mode == CandidateMode::Iterate) {
            x = y;
        } else {
            Eigen::MatrixXd A = jacobian(m, x, opt.fd_eps, opt.spectral) - Eigen::MatrixXd::Identity(n, n);
            x -= A.fullPivLu().solve(y - x);
        }
    }
    throw NoConvergence("periodic candidate search did not converge");
}

std::vector<EigenPair> approx_spectrum(const Model& m, const Coeffs& u_star, int k, const SpectralOptions& opt,
                                       double eps) {
    const Eigen::MatrixXd J = jacobian(m, to_eigen(u_star, opt.n_modes), eps, opt);
    Eigen::EigenSolver<Eigen::MatrixXd> es(J);
    if (es.info() != Eigen::Success) throw NoConvergence("eigen decomposition failed");
    std::vector<int> idx(J.rows());
    for (int i = 0; i < J.rows(); ++i) idx[i] = i;
    const auto ev = es.eigenvalues();
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return std::abs(ev[a]) > std::abs(ev[b]); });
    std::vector<EigenPair> out;
    for (int i = 0; i < k && i < static_cast<int>(idx.size()); ++i) {
        EigenPair p;
        p.value = ev[idx[i]].real();
        p.imag = ev[idx[i]].imag();
        Eigen::VectorXd v = es.eigenvectors().col(idx[i]).real();
        Eigen::Index at;
        v.cwiseAbs().maxCoeff(&at);
        p.vector = from_eigen(v / v[at]);
        out.push_back(p);
    }
    return out;
}

}  // namespace pdecert
