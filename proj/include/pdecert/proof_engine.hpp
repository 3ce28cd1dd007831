#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdecert/config.hpp"

namespace pdecert {

/// candidate (mode k at index k-1) + radius/k^p [-1,1] on modes 1..n_head, tail C/k^s; parity zeroes modes.
PQSet build_initial_set(const Coeffs& candidate, double head_radius, const Interval& tail_C, double tail_s,
                        Parity parity, int n_head, double radius_exponent = 0.0);

struct OrbitResult {
    bool contained = false;
    TailVector X1;
    int steps = 0;      // steps actually used (doubled after failures)
    std::string error;  // empty unless the integration failed
};

/// phi(1, 0, X0) and the containment verdict; steps double on failure up to max_steps.
OrbitResult verify_periodic_orbit(const Model& m, const PQSet& X0, int steps, int max_steps = 16384,
                                  const EvolutionConfig& cfg = {});

/// Bound of V(1,0,x)h for x in X0, h in h0 (the h part of integrate_variational over [0,1]).
TailVector run_c1_direction(const Model& m, const PQSet& X0, const TailVector& h0, int steps,
                            int max_steps = 16384, const EvolutionConfig& cfg = {});

/// 2 (sum_i sup|W_i| + sup|R|).
Interval assemble_c0_operator_norm(const std::vector<TailVector>& directions, const TailVector& rest);
/// sqrt of the largest sum |u_k|^2 k^4 over R.
Interval assemble_h2_operator_norm(const TailVector& rest);
/// assemble_h2_operator_norm of R + sum_i [-1,1] W_i, the image of the split set.
Interval assemble_h2_split_norm(const std::vector<TailVector>& directions, const TailVector& rest);

/// Initial data of the C1 runs for a config: sin(jx)/j^p per direction, then the rest set (if any).
std::vector<TailVector> c1_initial_sets(const C1Config& c, int h_modes);

struct DirectionResult {
    std::string label;  // "sin(jx)" or "rest"
    TailVector h0;
    std::optional<TailVector> result;
    std::string error;
};

struct ProofCertificate {
    std::string name;
    RunConfig config;
    Coeffs candidate;
    TailVector X0;
    OrbitResult orbit;
    bool orbit_checked = false;
    std::vector<DirectionResult> directions;  // the rest set, if any, comes last
    std::optional<Interval> norm;
    bool attracting = false;
    std::vector<std::string> errors;
    // excluded from the certificate text
    double c0_seconds = 0.0, c1_seconds = 0.0;
};

/// Candidate search, X0, orbit containment, C1 runs (on `threads` workers) and the norm verdict.
ProofCertificate certify(const RunConfig& c, int threads = 1);

/// Exit status of a run: 0 when every requested verdict holds, else 1.
int verdict_status(const ProofCertificate& p);

/// Bit-exact key-value text; no timings, independent of the thread count.
std::string certificate_text(const ProofCertificate& p);

std::string csv_header();
std::string csv_row(const ProofCertificate& p);

struct CertificateCheck {
    bool ok = false;
    std::vector<std::string> messages;
};

/// Re-checks X1 in X0 and the recorded norm bound from the embedded sets, without integrating.
CertificateCheck verify_certificate(const std::string& text);

/// Parses the to_certificate layout back into a vector.
TailVector parse_tail_vector(const std::string& text, Basis basis, Parity parity);

}  // namespace pdecert
