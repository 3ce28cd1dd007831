#include "pdecert/proof_engine.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <thread>

namespace pdecert {

PQSet build_initial_set(const Coeffs& candidate, double head_radius, const Interval& tail_C, double tail_s,
                        Parity parity, int n_head, double radius_exponent) {
    if (!(head_radius > 0)) throw std::invalid_argument("head radius must be positive");
    if (!(tail_s > 1)) throw std::invalid_argument("tail exponent must exceed 1");
    std::vector<Interval> head(n_head, Interval(0.0));
    for (int k = 1; k <= n_head; ++k) {
        if (!parity_allows(parity, k)) continue;
        const double c = k <= static_cast<int>(candidate.size()) ? candidate[k - 1] : 0.0;
        Interval r = ball(head_radius);
        if (radius_exponent != 0.0) r = r / pow_real(k, Interval(radius_exponent));
        head[k - 1] = Interval(c) + r;
    }
    return TailVector::from_head(Basis::Sine, head, tail_C, tail_s, parity);
}

namespace {

template <class F>
auto with_doubling(int steps, int max_steps, F&& run) -> decltype(run(steps)) {
    for (int n = steps;; n *= 2) {
        try {
            return run(n);
        } catch (const EnclosureNotFound&) {
            if (2L * n > max_steps) throw;
        }
    }
}

}  // namespace

OrbitResult verify_periodic_orbit(const Model& m, const PQSet& X0, int steps, int max_steps,
                                  const EvolutionConfig& cfg) {
    OrbitResult r;
    if (!X0.bounded()) {
        r.error = "initial set is unbounded";
        return r;
    }
    try {
        IntegrationReport rep = with_doubling(steps, max_steps, [&](int n) {
            r.steps = n;
            return integrate(m, 0.0, 1.0, X0, n, cfg);
        });
        r.X1 = rep.output;
        r.contained = vsubset(r.X1, X0);
    } catch (const std::exception& e) {
        // any failure leaves the verdict negative
        r.contained = false;
        r.error = e.what();
    }
    return r;
}

TailVector run_c1_direction(const Model& m, const PQSet& X0, const TailVector& h0, int steps, int max_steps,
                            const EvolutionConfig& cfg) {
    return with_doubling(steps, max_steps, [&](int n) {
               return integrate_variational(m, 0.0, 1.0, {X0, h0}, n, cfg);
           })
        .output.h;
}

Interval assemble_c0_operator_norm(const std::vector<TailVector>& directions, const TailVector& rest) {
    Interval s = sup_norm_bound(rest);
    for (auto& w : directions) s = s + sup_norm_bound(w);
    return Interval(2.0) * s;
}

Interval assemble_h2_operator_norm(const TailVector& rest) {
    const Interval q = h2_norm_sq_bound(rest);
    return Interval(0.0, sqrt(Interval(q.hi)).hi);
}

Interval assemble_h2_split_norm(const std::vector<TailVector>& directions, const TailVector& rest) {
    TailVector R = rest;
    for (auto& w : directions) R = vadd(R, vscale(w, unit()));
    return assemble_h2_operator_norm(R);
}

std::vector<TailVector> c1_initial_sets(const C1Config& c, int h_modes) {
    std::vector<TailVector> out;
    for (int j : c.directions) {
        std::vector<Interval> head(std::max(h_modes, j), Interval(0.0));
        head[j - 1] = Interval(1.0) / pow_real(j, Interval(c.direction_scale_exponent));
        out.push_back(TailVector::from_head(Basis::Sine, head));
    }
    if (c.rest_from >= 1) {
        std::vector<Interval> head(std::max(h_modes, c.rest_from), Interval(0.0));
        for (int k = c.rest_from; k <= static_cast<int>(head.size()); ++k)
            head[k - 1] = unit() / pow_real(k, Interval(c.rest_scale_exponent));
        out.push_back(TailVector::from_head(Basis::Sine, head, unit(), c.rest_s));
    }
    return out;
}

ProofCertificate certify(const RunConfig& c, int threads) {
    using clock = std::chrono::steady_clock;
    ProofCertificate p;
    p.name = c.output.name;
    p.config = c;
    const Model& m = c.model;
    const int n = c.set.head_modes;

    if (c.set.center_on_candidate) {
        CandidateOptions o = c.set.candidate;
        o.spectral.n_modes = std::max(o.spectral.n_modes, n);
        try {
            Coeffs full = find_periodic_candidate(m, o);
            p.candidate.assign(full.begin(), full.begin() + n);
        } catch (const std::exception& e) {
            p.errors.push_back(std::string("candidate: ") + e.what());
            return p;
        }
    } else {
        p.candidate.assign(n, 0.0);
    }
    for (int k = 1; k <= n; ++k)
        if (!parity_allows(m.parity(), k)) p.candidate[k - 1] = 0.0;
    p.X0 = build_initial_set(p.candidate, c.set.radius, c.set.tail_C, c.set.tail_s, m.parity(), n,
                             c.set.radius_exponent);

    const EvolutionConfig& ev = c.integrator.evolution;
    if (c.set.verify_orbit) {
        const auto t0 = clock::now();
        p.orbit = verify_periodic_orbit(m, p.X0, c.integrator.steps, c.integrator.max_steps, ev);
        p.c0_seconds = std::chrono::duration<double>(clock::now() - t0).count();
        p.orbit_checked = true;
        if (!p.orbit.error.empty()) p.errors.push_back("orbit: " + p.orbit.error);
    }

    if (c.c1.enabled) {
        const auto t0 = clock::now();
        const std::vector<TailVector> h0 = c1_initial_sets(c.c1, n * c.c1.h_modes_factor);
        for (std::size_t i = 0; i < h0.size(); ++i) {
            DirectionResult d;
            d.label = i < c.c1.directions.size() ? "sin(" + std::to_string(c.c1.directions[i]) + "x)" : "rest";
            d.h0 = h0[i];
            p.directions.push_back(d);
        }
        const int steps = c.c1.steps > 0 ? c.c1.steps : c.integrator.steps;
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i; (i = next++) < p.directions.size();) {
                DirectionResult& d = p.directions[i];
                try {
                    d.result = run_c1_direction(m, p.X0, d.h0, steps, c.integrator.max_steps, ev);
                } catch (const std::exception& e) {
                    d.error = e.what();
                }
            }
        };
        const int nt = std::max(1, std::min<int>(threads, static_cast<int>(p.directions.size())));
        std::vector<std::thread> pool;
        for (int t = 1; t < nt; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
        p.c1_seconds = std::chrono::duration<double>(clock::now() - t0).count();

        bool all = true;
        for (auto& d : p.directions) {
            if (!d.error.empty()) p.errors.push_back("c1 " + d.label + ": " + d.error);
            all = all && d.result.has_value();
        }
        if (all && c.c1.norm != NormKind::None) {
            std::vector<TailVector> dirs;
            for (std::size_t i = 0; i + 1 < p.directions.size(); ++i) dirs.push_back(*p.directions[i].result);
            const TailVector& rest = *p.directions.back().result;
            try {
                p.norm = c.c1.norm == NormKind::C0 ? assemble_c0_operator_norm(dirs, rest)
                                                  : assemble_h2_split_norm(dirs, rest);
            } catch (const std::exception& e) {
                p.errors.push_back(std::string("norm: ") + e.what());
            }
        }
    }
    p.attracting = p.orbit_checked && p.orbit.contained && p.norm && p.norm->hi < 1.0;
    return p;
}

int verdict_status(const ProofCertificate& p) {
    const RunConfig& c = p.config;
    if (p.X0.head.empty()) return 1;
    if (c.set.verify_orbit && !p.orbit.contained) return 1;
    if (c.c1.enabled) {
        for (auto& d : p.directions)
            if (!d.result) return 1;
        if (c.c1.norm != NormKind::None && !p.attracting) return 1;
    }
    return 0;
}

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

const char* parity_name(Parity p) {
    switch (p) {
        case Parity::Odd: return "odd";
        case Parity::Even: return "even";
        default: return "none";
    }
}

Parity parse_parity(const std::string& s) {
    if (s == "odd") return Parity::Odd;
    if (s == "even") return Parity::Even;
    return Parity::None;
}

void put_vector(std::ostringstream& os, const std::string& section, const TailVector& v) {
    os << "\n[" << section << "]\n";
    os << "basis = " << (v.basis == Basis::Sine ? "sine" : "cosine") << "\n";
    os << "parity = " << parity_name(v.parity) << "\n";
    os << to_certificate(v);
}

std::string verdict(bool b) { return b ? "validated" : "not validated"; }

}  // namespace

std::string certificate_text(const ProofCertificate& p) {
    std::ostringstream os;
    os << "[run]\nname = " << p.name << "\nmodel = " << p.config.model.name() << "\n";
    std::istringstream cfg(dump_config(p.config));
    for (std::string line; std::getline(cfg, line);) {
        if (!line.empty() && line.front() == '[')
            os << "\n[config." << line.substr(1);
        else if (!line.empty())
            os << line;
        if (!line.empty()) os << "\n";
    }
    os << "\n[candidate]\n";
    for (std::size_t k = 0; k < p.candidate.size(); ++k) os << k + 1 << " = " << fmt(p.candidate[k]) << "\n";
    for (auto& e : p.errors) os << "\n[error]\nmessage = " << e << "\n";
    if (p.X0.head.empty()) return os.str();
    put_vector(os, "X0", p.X0);
    os << "\n[orbit]\nchecked = " << (p.orbit_checked ? "true" : "false") << "\n";
    if (p.orbit_checked) {
        os << "steps = " << p.orbit.steps << "\ncontained = " << (p.orbit.contained ? "true" : "false") << "\n";
        if (p.orbit.error.empty()) put_vector(os, "X1", p.orbit.X1);
    }
    for (std::size_t i = 0; i < p.directions.size(); ++i) {
        const DirectionResult& d = p.directions[i];
        const std::string sec = "c1." + std::to_string(i + 1);
        os << "\n[" << sec << "]\nlabel = " << d.label << "\n";
        if (!d.error.empty()) os << "error = " << d.error << "\n";
        put_vector(os, sec + ".h0", d.h0);
        if (d.result) put_vector(os, sec + ".result", *d.result);
    }
    os << "\n[verdict]\n";
    if (p.norm) os << "norm = " << to_string(*p.norm) << "\n";
    os << "orbit = " << (p.orbit_checked ? verdict(p.orbit.contained) : "not requested") << "\n";
    const bool norm_requested = p.config.c1.enabled && p.config.c1.norm != NormKind::None;
    os << "attraction = " << (norm_requested ? verdict(p.attracting) : "not requested") << "\n";
    return os.str();
}

std::string csv_header() { return "name,alpha,modes,c0_seconds,c1_seconds,norm,orbit,attraction"; }

std::string csv_row(const ProofCertificate& p) {
    char buf[256];
    const bool norm_requested = p.config.c1.enabled && p.config.c1.norm != NormKind::None;
    std::snprintf(buf, sizeof buf, "%s,%.9g,%d,%.3f,%.3f,%s,%s,%s", p.name.c_str(),
                  p.config.model.kind == ModelKind::Burgers ? p.config.model.bu.alpha : NAN,
                  p.config.set.head_modes, p.c0_seconds, p.c1_seconds, p.norm ? fmt(p.norm->hi).c_str() : "",
                  p.orbit_checked ? verdict(p.orbit.contained).c_str() : "not requested",
                  norm_requested ? verdict(p.attracting).c_str() : "not requested");
    return buf;
}

TailVector parse_tail_vector(const std::string& text, Basis basis, Parity parity) {
    std::istringstream in(text);
    std::vector<Interval> head;
    Interval c0(0.0), C(0.0);
    double s = 2.0;
    int n = -1;
    for (std::string line; std::getline(in, line);) {
        if (line.empty()) continue;
        if (line.rfind("tail:", 0) == 0) {
            const auto a = line.find("C="), b = line.find(" s="), e = line.find(" n=");
            if (a == std::string::npos || b == std::string::npos || e == std::string::npos)
                throw std::invalid_argument("bad tail line: " + line);
            C = parse_interval(line.substr(a + 2, b - a - 2));
            s = std::stod(line.substr(b + 3, e - b - 3));
            n = std::stoi(line.substr(e + 3));
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("bad coefficient line: " + line);
        const int k = std::stoi(line.substr(0, colon));
        const Interval x = parse_interval(line.substr(colon + 1));
        if (k == 0) {
            c0 = x;
        } else {
            if (k != static_cast<int>(head.size()) + 1) throw std::invalid_argument("coefficients out of order");
            head.push_back(x);
        }
    }
    if (n != static_cast<int>(head.size())) throw std::invalid_argument("tail line missing or head length mismatch");
    TailVector v = TailVector::from_head(basis, head, C, s, parity);
    v.c0 = c0;
    return v;
}

namespace {

using Sections = std::map<std::string, std::vector<std::string>>;

Sections split_sections(const std::string& text) {
    Sections out;
    std::string cur;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            cur = line.substr(1, line.size() - 2);
            if (out.count(cur) && cur != "error") throw std::invalid_argument("duplicate section " + cur);
            out[cur];
            continue;
        }
        out[cur].push_back(line);
    }
    return out;
}

std::string value_of(const std::vector<std::string>& lines, const std::string& key) {
    for (auto& l : lines)
        if (l.rfind(key + " = ", 0) == 0) return l.substr(key.size() + 3);
    throw std::invalid_argument("missing key " + key);
}

bool has_key(const std::vector<std::string>& lines, const std::string& key) {
    for (auto& l : lines)
        if (l.rfind(key + " = ", 0) == 0) return true;
    return false;
}

TailVector vector_of(const std::vector<std::string>& lines) {
    std::string body;
    Basis b = Basis::Sine;
    Parity p = Parity::None;
    for (auto& l : lines) {
        if (l.rfind("basis = ", 0) == 0)
            b = l.substr(8) == "cosine" ? Basis::Cosine : Basis::Sine;
        else if (l.rfind("parity = ", 0) == 0)
            p = parse_parity(l.substr(9));
        else
            body += l + "\n";
    }
    return parse_tail_vector(body, b, p);
}

}  // namespace

CertificateCheck verify_certificate(const std::string& text) {
    CertificateCheck r;
    auto fail = [&](const std::string& m) { r.messages.push_back("FAIL " + m); };
    auto pass = [&](const std::string& m) { r.messages.push_back("ok   " + m); };
    try {
        Sections s = split_sections(text);
        std::string cfg_text;
        for (auto& [name, lines] : s) {
            if (name.rfind("config.", 0) != 0) continue;
            cfg_text += "[" + name.substr(7) + "]\n";
            for (auto& l : lines) cfg_text += l + "\n";
        }
        const RunConfig c = parse_config(cfg_text);
        if (!s.count("verdict")) throw std::invalid_argument("missing verdict section");
        const auto& v = s["verdict"];
        const bool claim_orbit = value_of(v, "orbit") == "validated";
        const bool claim_attr = value_of(v, "attraction") == "validated";
        bool ok = true;

        if (claim_orbit) {
            const TailVector X0 = vector_of(s.at("X0")), X1 = vector_of(s.at("X1"));
            if (vsubset(X1, X0)) {
                pass("X1 is contained in X0");
            } else {
                fail("X1 is not contained in X0");
                ok = false;
            }
            if (!X0.bounded()) {
                fail("X0 is unbounded");
                ok = false;
            }
        }

        if (s.count("X0")) {
            // the C1 initial data must be the ones the config prescribes
            const TailVector X0 = vector_of(s.at("X0"));
            const auto h0 = c1_initial_sets(c.c1, X0.n() * c.c1.h_modes_factor);
            std::vector<TailVector> res;
            bool complete = c.c1.enabled;
            for (std::size_t i = 0; c.c1.enabled && i < h0.size(); ++i) {
                const std::string sec = "c1." + std::to_string(i + 1);
                if (!s.count(sec + ".h0")) throw std::invalid_argument("missing " + sec);
                if (to_certificate(vector_of(s.at(sec + ".h0"))) != to_certificate(h0[i])) {
                    fail(sec + " initial data differs from the config");
                    ok = false;
                }
                if (s.count(sec + ".result"))
                    res.push_back(vector_of(s.at(sec + ".result")));
                else
                    complete = false;
            }
            if (has_key(v, "norm")) {
                const Interval recorded = parse_interval(value_of(v, "norm"));
                if (!complete) {
                    fail("norm recorded without all C1 results");
                    ok = false;
                } else {
                    const TailVector rest = res.back();
                    res.pop_back();
                    const Interval again = c.c1.norm == NormKind::C0 ? assemble_c0_operator_norm(res, rest)
                                                                     : assemble_h2_split_norm(res, rest);
                    if (again == recorded) {
                        pass("norm bound " + to_string(recorded) + " recomputed from the C1 results");
                    } else {
                        fail("norm bound does not match the C1 results: " + to_string(again));
                        ok = false;
                    }
                    if (claim_attr && !(recorded.hi < 1.0)) {
                        fail("attraction claimed with norm bound >= 1");
                        ok = false;
                    }
                }
            } else if (claim_attr) {
                fail("attraction claimed without a norm bound");
                ok = false;
            }
        }
        if (claim_attr && !claim_orbit) {
            fail("attraction claimed without orbit containment");
            ok = false;
        }
        if (claim_attr) pass("attraction claim consistent");
        r.ok = ok;
    } catch (const std::exception& e) {
        fail(std::string("unreadable certificate: ") + e.what());
        r.ok = false;
    }
    return r;
}

}  // namespace pdecert
