#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pdecert/proof_engine.hpp"

using namespace pdecert;
namespace fs = std::filesystem;

namespace {

struct Common {
    std::string out;
    int threads = 1;
    int steps = 0;
    int modes = 0;
    std::vector<std::string> overrides;
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--out", c.out, "output directory (default: output.dir of the config)");
    app->add_option("--threads", c.threads, "worker threads for the C1 directions")->check(CLI::PositiveNumber);
    app->add_option("--steps", c.steps, "time steps per unit time")->check(CLI::NonNegativeNumber);
    app->add_option("--modes", c.modes, "explicit head modes")->check(CLI::NonNegativeNumber);
    app->add_option("--set", c.overrides, "extra section.key=value overrides");
}

RunConfig load(const std::string& path, const Common& c) {
    RunConfig cfg = load_config(path);
    for (auto& o : c.overrides) apply_override(cfg, o);
    if (c.steps > 0) cfg.integrator.steps = c.steps;
    if (c.modes > 0) cfg.set.head_modes = c.modes;
    if (!c.out.empty()) cfg.output.dir = c.out;
    return cfg;
}

void write_file(const fs::path& p, const std::string& text) {
    fs::create_directories(p.parent_path());
    std::ofstream f(p);
    f << text;
    if (!f) throw std::runtime_error("cannot write " + p.string());
}

void report(const ProofCertificate& p) {
    std::printf("%s: orbit %s, attraction %s", p.name.c_str(),
                p.orbit_checked ? (p.orbit.contained ? "validated" : "not validated") : "not requested",
                p.config.c1.enabled && p.config.c1.norm != NormKind::None
                    ? (p.attracting ? "validated" : "not validated")
                    : "not requested");
    if (p.norm) std::printf(", norm <= %.6g", p.norm->hi);
    std::printf(" (C0 %.2fs, C1 %.2fs)\n", p.c0_seconds, p.c1_seconds);
    for (auto& e : p.errors) std::printf("  %s\n", e.c_str());
}

int cmd_run(const std::string& path, const Common& c) {
    const RunConfig cfg = load(path, c);
    const ProofCertificate p = certify(cfg, c.threads);
    const fs::path dir(cfg.output.dir);
    write_file(dir / (p.name + ".cert"), certificate_text(p));
    write_file(dir / (p.name + ".csv"), csv_header() + "\n" + csv_row(p) + "\n");
    report(p);
    return verdict_status(p);
}

// escalation: head modes grow by mode_increment while the run fails, up to max_head_modes
ProofCertificate escalate(RunConfig cfg, int threads) {
    for (;;) {
        ProofCertificate p = certify(cfg, threads);
        const bool blew_up = !p.errors.empty() || (p.orbit_checked && !p.orbit.contained);
        const int next = cfg.set.head_modes + cfg.set.mode_increment;
        if (!blew_up || cfg.set.mode_increment <= 0 || next > cfg.set.max_head_modes) return p;
        cfg.set.head_modes = next;
    }
}

int cmd_sweep(const std::string& path, const std::string& param, const std::vector<std::string>& values,
              const Common& c) {
    const RunConfig base = load(path, c);
    std::ostringstream md, csv;
    md << "| name | value | modes | C0 time (s) | C1 time (s) | norm | orbit | attraction |\n"
       << "|---|---|---|---|---|---|---|---|\n";
    csv << "value," << csv_header() << "\n";
    for (const auto& v : values) {
        RunConfig cfg = base;
        apply_override(cfg, param + "=" + v);
        std::string tag = v;
        for (char& ch : tag)
            if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
        cfg.output.name = base.output.name + "_" + tag;
        ProofCertificate p;
        try {
            p = escalate(cfg, c.threads);
        } catch (const std::exception& e) {
            std::printf("%s = %s failed: %s\n", param.c_str(), v.c_str(), e.what());
            md << "| " << cfg.output.name << " | " << v << " | | | | | error | error |\n";
            continue;
        }
        write_file(fs::path(cfg.output.dir) / (p.name + ".cert"), certificate_text(p));
        report(p);
        const std::string row = csv_row(p);
        csv << v << "," << row << "\n";
        std::stringstream rs(row);
        std::vector<std::string> f;
        for (std::string x; std::getline(rs, x, ',');) f.push_back(x);
        while (f.size() < 8) f.push_back("");
        md << "| " << f[0] << " | " << v << " | " << f[2] << " | " << f[3] << " | " << f[4] << " | " << f[5] << " | "
           << f[6] << " | " << f[7] << " |\n";
    }
    const fs::path dir(base.output.dir);
    write_file(dir / (base.output.name + "_sweep.md"), md.str());
    write_file(dir / (base.output.name + "_sweep.csv"), csv.str());
    return 0;
}

int cmd_trace(const std::string& path, const Common& c) {
    const RunConfig cfg = load(path, c);
    const int n = std::max(cfg.set.candidate.spectral.n_modes, cfg.set.head_modes);
    Coeffs u0(n, 0.0);
    if (cfg.set.center_on_candidate) {
        CandidateOptions o = cfg.set.candidate;
        o.spectral.n_modes = n;
        u0 = find_periodic_candidate(cfg.model, o);
    }
    SpectralOptions so = cfg.set.candidate.spectral;
    so.n_modes = n;
    const auto traj = spectral_trajectory(cfg.model, 0.0, 1.0, u0, cfg.output.trace_samples, so);
    std::ostringstream os;
    os << "t";
    for (int k : cfg.output.trace_modes) os << ",u" << k;
    os << "\n";
    char buf[64];
    for (std::size_t j = 0; j < traj.size(); ++j) {
        std::snprintf(buf, sizeof buf, "%.17g", double(j) / cfg.output.trace_samples);
        os << buf;
        for (int k : cfg.output.trace_modes) {
            std::snprintf(buf, sizeof buf, ",%.17g", k <= n ? traj[j][k - 1] : 0.0);
            os << buf;
        }
        os << "\n";
    }
    const fs::path out = fs::path(cfg.output.dir) / (cfg.output.name + "_trace.csv");
    write_file(out, os.str());
    std::printf("wrote %s (%zu samples)\n", out.string().c_str(), traj.size());
    return 0;
}

int cmd_verify(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read certificate: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    const CertificateCheck r = verify_certificate(ss.str());
    for (auto& m : r.messages) std::printf("%s\n", m.c_str());
    std::printf("%s\n", r.ok ? "certificate claims hold" : "certificate claims do not hold");
    return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rigorous periodic orbits and attraction for dissipative PDEs"};
    app.require_subcommand(1);
    Common common;
    std::string cfg_path, param, cert;
    std::vector<std::string> values;

    auto* run = app.add_subcommand("run", "certify one configuration");
    run->add_option("config", cfg_path)->required();
    add_common(run, common);

    auto* sweep = app.add_subcommand("sweep", "certify a template over parameter values");
    sweep->add_option("config", cfg_path)->required();
    sweep->add_option("--param", param, "section.key to vary")->required();
    sweep->add_option("--values", values, "values (fractions allowed)")->required()->delimiter(',');
    add_common(sweep, common);

    auto* trace = app.add_subcommand("trace", "non-rigorous trajectory of selected modes over one period");
    trace->add_option("config", cfg_path)->required();
    add_common(trace, common);

    auto* verify = app.add_subcommand("verify-certificate", "re-check the claims of a certificate");
    verify->add_option("certificate", cert)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        if (*run) return cmd_run(cfg_path, common);
        if (*sweep) return cmd_sweep(cfg_path, param, values, common);
        if (*trace) return cmd_trace(cfg_path, common);
        return cmd_verify(cert);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
