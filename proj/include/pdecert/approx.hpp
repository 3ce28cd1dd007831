#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pdecert/models.hpp"

namespace pdecert {

/// Plain sine coefficients; index i holds mode i+1.
using Coeffs = std::vector<double>;

struct BlowUpDetected : std::runtime_error {
    BlowUpDetected() : std::runtime_error("spectral integration blew up") {}
};

struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct SpectralOptions {
    int n_modes = 32;
    double dt = 1.0 / 4096;
};

/// Right-hand side lambda_k x_k + f_k(t, x) of the Galerkin system on n modes (pseudo-spectral, alias free).
Coeffs spectral_field(const Model& m, double t, const Coeffs& x);

/// Classical RK4 on the Galerkin system. Throws BlowUpDetected once a coefficient exceeds 1e6.
Coeffs spectral_integrate(const Model& m, double t0, double t1, const Coeffs& u0, const SpectralOptions& opt = {});

/// Samples at t0 + (t1-t0) j / n_samples, j = 0..n_samples.
std::vector<Coeffs> spectral_trajectory(const Model& m, double t0, double t1, const Coeffs& u0, int n_samples,
                                        const SpectralOptions& opt = {});

enum class CandidateMode { Iterate, Newton };

struct CandidateOptions {
    SpectralOptions spectral;
    CandidateMode mode = CandidateMode::Iterate;
    Coeffs initial;  // empty: sin(x)
    double tol = 1e-11;
    int max_iter = 400;
    double fd_eps = 1e-6;
};

/// Approximate fixed point of the time-1 map.
Coeffs find_periodic_candidate(const Model& m, const CandidateOptions& opt = {});

/// Head sup-norm of phi(1,0,u) - u.
double time1_defect(const Model& m, const Coeffs& u, const SpectralOptions& opt = {});

/// Finite-difference Jacobian of the time-1 map; column j is the response to mode j+1.
std::vector<Coeffs> time1_jacobian(const Model& m, const Coeffs& u, double eps, const SpectralOptions& opt = {});

struct EigenPair {
    double value = 0.0;  // real part
    double imag = 0.0;
    Coeffs vector;       // real part, scaled to a largest entry of 1
};

/// Top-k eigenpairs (by modulus) of the time-1 derivative at u_star.
std::vector<EigenPair> approx_spectrum(const Model& m, const Coeffs& u_star, int k, const SpectralOptions& opt = {},
                                       double eps = 1e-6);

}  // namespace pdecert
