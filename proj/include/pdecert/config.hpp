#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pdecert/approx.hpp"
#include "pdecert/evolution.hpp"

namespace pdecert {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

enum class NormKind { None, C0, H2 };

struct SetConfig {
    bool center_on_candidate = true;  // false: center 0
    int head_modes = 8;
    double radius = 1e-4;
    double radius_exponent = 0.0;     // head radius r / k^p
    Interval tail_C = Interval(-1.0, 1.0);
    double tail_s = 4.0;
    bool verify_orbit = true;
    CandidateOptions candidate;
    int mode_increment = 20;          // sweep escalation
    int max_head_modes = 200;
};

struct IntegratorConfig {
    int steps = 256;
    int max_steps = 16384;
    EvolutionConfig evolution;
};

struct C1Config {
    bool enabled = true;
    NormKind norm = NormKind::C0;
    std::vector<int> directions{1, 2, 3};
    double direction_scale_exponent = 0.0;  // h0 = sin(jx) / j^p
    int rest_from = 4;                       // 0: no rest set
    double rest_scale_exponent = 0.0;        // rest h_k in [-1,1] / k^p
    double rest_s = 0.0;
    int h_modes_factor = 1;                  // variational head = factor * head_modes
    int steps = 0;                           // 0: integrator.steps
};

struct OutputConfig {
    std::string dir = "out";
    std::string name;  // empty: config file stem
    int trace_samples = 1000;
    std::vector<int> trace_modes{1, 3, 5, 7};
};

struct RunConfig {
    Model model = Model::chafee({});
    SetConfig set;
    IntegratorConfig integrator;
    C1Config c1;
    OutputConfig output;
};

/// Parses "[section]" / "key = value" text; '#' starts a comment. Throws ConfigError.
RunConfig parse_config(const std::string& text, const std::string& name = "run");
RunConfig load_config(const std::string& path);

/// Applies "section.key=value" (or bare "key=value" for unique keys) on top of a parsed config.
void apply_override(RunConfig& c, const std::string& assignment);

/// Accepts decimals and fractions "a/b".
double parse_real(const std::string& s);

/// Canonical text of every setting; parse_config(dump_config(c)) reproduces c.
std::string dump_config(const RunConfig& c);

}  // namespace pdecert
