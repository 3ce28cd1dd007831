#pragma once

#include <string>
#include <vector>

#include "pdecert/imatrix.hpp"
#include "pdecert/tailvec.hpp"

namespace pdecert {

/// u_t = u_xx + lambda u - b(t) u^3 on (0,pi), Dirichlet, b(t) = b_amp sin(2 pi t) + b_off.
struct ChafeeInfanteParams {
    double lambda = 2.0;
    double b_amp = 0.5;
    double b_off = 1.0;
    bool odd_subspace = true;
};

/// u_t = -(-Delta)^alpha u + nu (u^2)_x + (g_amp sin(2 pi t) + g_off) sin x.
struct BurgersParams {
    double alpha = 1.0;
    double nu = 0.5;
    double g_amp = 0.5;
    double g_off = 1.0;
};

/// u_t = u_xx + shift u, no nonlinearity; used to check the pipeline against exact flows.
struct LinearParams {
    double shift = 0.0;
};

enum class ModelKind { ChafeeInfante, Burgers, Linear };

struct TimeBox {
    double t0 = 0.0;
    double tau = 0.0;
    TimeBox(double t, double dt);
    Interval range() const;
};

struct Model {
    ModelKind kind = ModelKind::ChafeeInfante;
    ChafeeInfanteParams ci;
    BurgersParams bu;
    LinearParams lin;

    static Model chafee(const ChafeeInfanteParams& p);
    static Model burgers(const BurgersParams& p);
    static Model linear(const LinearParams& p);

    std::string name() const;
    Parity parity() const;

    /// lambda_k of the diagonal linear part.
    Interval eigenvalue(long k) const;
    /// lambda_k = -mu_k with mu_k increasing for k >= k_dissipative().
    long k_dissipative() const;
    /// Exponent gained by L^{-1} on the tail: 2 (Laplacian) or 2 alpha.
    double gamma() const;
    /// Exponent lost by the nonlinearity (1 for the derivative in Burgers).
    double derivative_loss() const;
    /// 1/lambda_k in L / k^gamma for all k > n.
    Interval inverse_eigen_tail_factor(int n) const;
    /// lambda_k in F * k^gamma for all k > n.
    Interval eigen_tail_factor(int n) const;

    /// {A sin(2 pi t) + B : t in T} for the b(t) or g(t) coefficient.
    Interval time_coeff(const Interval& t) const;
    /// Taylor coefficients of the time coefficient around t, orders 0..p.
    IVec time_coeff_taylor(const Interval& t, int p) const;
};

Interval time_coeff_bound(const Model& m, const TimeBox& box);

/// Enclosure of f(t, x) over the time box and the set X (sine basis, head length X.n()).
TailVector nonlinearity_bound(const Model& m, const TimeBox& box, const TailVector& X);
/// Enclosure of f(t,x) - f(t, P_m x) computed from its algebraic form.
TailVector galerkin_remainder_bound(const Model& m, const TimeBox& box, const TailVector& X, int mm);
/// Enclosure of Df(t,u) h for u in U, h in H.
TailVector variational_nonlinearity_bound(const Model& m, const TimeBox& box, const TailVector& U,
                                          const TailVector& H);
/// Enclosure of Df(t,u)h - Df(t,P_m u) P_m h.
TailVector variational_remainder_bound(const Model& m, const TimeBox& box, const TailVector& U, const TailVector& H,
                                       int mm);

// ---- Galerkin system on modes 1..m (IVec index i holds mode i+1) ----

/// Lambda x + P_m f(t, P_m x).
IVec galerkin_field(const Model& m, const Interval& t, const IVec& x);
/// Taylor coefficients x[0..p] of the Galerkin solution through x0 at time t.
std::vector<IVec> galerkin_taylor(const Model& m, const Interval& t, const IVec& x0, int p);
/// Taylor coefficients V[0..p] of the variational matrix along xs (xs needs orders 0..p-1).
std::vector<IMat> variational_taylor(const Model& m, const Interval& t, const std::vector<IVec>& xs, const IMat& V0,
                                     int p);
/// Jacobian of the Galerkin field.
IMat galerkin_jacobian(const Model& m, const Interval& t, const IVec& x);
/// Derivative of (x,h) -> J(x)h with respect to x.
IMat galerkin_second(const Model& m, const Interval& t, const IVec& x, const IVec& h);

}  // namespace pdecert
