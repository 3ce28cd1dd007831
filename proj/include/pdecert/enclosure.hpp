#pragma once

#include <stdexcept>
#include <vector>

#include "pdecert/models.hpp"

namespace pdecert {

/// Phase-space set: explicit head cuboid plus polynomial tail.
using PQSet = TailVector;

/// Solution set u and variational set h; h may be unbounded (s <= 1).
struct VarPair {
    TailVector u;
    TailVector h;
};

/// Throws AdmissibilityViolation unless the exponents allow Df(u)h to be enclosed.
void check_admissible(const Model& m, const VarPair& v);

struct EnclosureConfig {
    double inflate = 1.5;         // c in Z <- [-delta, c] Z1
    double inflate_low = 0.1;     // delta
    int max_inflate = 8;
    double tau_min = 0x1p-14;
};

struct ModeCertificate {
    long k = 0;  // 0 marks the tail certificate (constants in place of coefficients)
    Interval g, h, z;
};

/// Candidates Z and outputs Z1 carry a head correction to X0 and the tail of the whole set.
struct EnclosureResult {
    TailVector Z;
    TailVector Z1;
    TailVector E;   // the validated set: head X0 + Z1, tail of Z1
    TailVector Vf;  // nonlinear term over the set built from Z
    bool validated = false;
    double tau = 0.0;
    std::vector<ModeCertificate> modes;
    ModeCertificate tail;
    int attempts = 0;
};

struct VarEnclosureResult {
    EnclosureResult u;
    EnclosureResult h;
    bool validated = false;
    double tau = 0.0;
};

struct EnclosureNotFound : std::runtime_error {
    TailVector last_Z1;
    explicit EnclosureNotFound(TailVector z1)
        : std::runtime_error("no enclosure found down to the minimal time step"), last_Z1(std::move(z1)) {}
};

/// Head of X0 + Z with the tail of Z.
TailVector enclosure_set(const TailVector& X0, const TailVector& Z);

EnclosureResult validate_enclosure(const Model& m, const TimeBox& box, const PQSet& X0, const TailVector& Z);
EnclosureResult find_enclosure(const Model& m, const TimeBox& box, const PQSet& X0, const TailVector* hint,
                               const EnclosureConfig& cfg = {});

/// u part as validate_enclosure; h part for h' = L h + Df(t,u(t)) h with u(t) in X0u + Zu.
VarEnclosureResult validate_enclosure_variational(const Model& m, const TimeBox& box, const VarPair& V0,
                                                  const TailVector& Zu, const TailVector& Zh);
VarEnclosureResult find_enclosure_variational(const Model& m, const TimeBox& box, const VarPair& V0,
                                              const EnclosureConfig& cfg = {});

}  // namespace pdecert
