#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "pdecert/enclosure.hpp"

namespace pdecert {

struct EvolutionConfig {
    EnclosureConfig enclosure;
    int galerkin_modes = -1;  // modes solved as a differential inclusion; -1 picks the model default
    int taylor_order = 4;
    double raise_factor = 10.0;
    double s_max = 10.0;
    int max_rough_iter = 30;
};

/// Default Galerkin block size for head length n.
int default_galerkin_modes(const Model& m, int n);

struct StepDiagnostics {
    double t0 = 0.0;
    double tau = 0.0;
    double max_head_width = 0.0;
    Interval tail_C;
    double s_in = 0.0;
    double s_out = 0.0;
    int enclosure_attempts = 0;
};

struct StepReport {
    TailVector input;
    TailVector enclosure;  // X + Z1, valid on the whole step
    TailVector output;
    double tau = 0.0;
    StepDiagnostics diag;
};

struct VarStepReport {
    StepReport u;
    StepReport h;
};

struct IntegrationReport {
    TailVector input;
    TailVector output;
    double t0 = 0.0, t1 = 0.0;
    int steps = 0;
    std::vector<StepDiagnostics> diag;
};

struct VarIntegrationReport {
    VarPair input;
    VarPair output;
    double t0 = 0.0, t1 = 0.0;
    int steps = 0;
    std::vector<StepDiagnostics> diag_u, diag_h;
};

using StepObserver = std::function<void(const StepDiagnostics& u, const StepDiagnostics* h)>;

/// One step over [t0, t0 + tau'] with tau' <= box.tau (reduced when no enclosure exists for box.tau).
StepReport step(const Model& m, const TimeBox& box, const PQSet& X, const EvolutionConfig& cfg = {});
VarStepReport step_variational(const Model& m, const TimeBox& box, const VarPair& V, const EvolutionConfig& cfg = {});

/// Uniform substeps (t1-t0)/n_steps, each possibly split further.
IntegrationReport integrate(const Model& m, double t0, double t1, const PQSet& X, int n_steps,
                            const EvolutionConfig& cfg = {}, const StepObserver& obs = nullptr);
VarIntegrationReport integrate_variational(const Model& m, double t0, double t1, const VarPair& V, int n_steps,
                                           const EvolutionConfig& cfg = {}, const StepObserver& obs = nullptr);

// Tail factors, exposed for testing.
/// Upper bound of sup_{k>n} k^d e^{tau lambda_k}.
double sup_decay(const Model& m, int n, double tau, double d);
/// Upper bound of sup_{k>n} k^d (1 - e^{tau lambda_k}) / (-lambda_k), d <= gamma.
double sup_duhamel(const Model& m, int n, double tau, double d);

}  // namespace pdecert
