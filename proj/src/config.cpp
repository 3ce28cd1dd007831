#include "pdecert/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace pdecert {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

int parse_int(const std::string& s) {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw ConfigError("not an integer: " + s);
    return v;
}

bool parse_bool(const std::string& s) {
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw ConfigError("not a boolean: " + s);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!trim(item).empty()) out.push_back(trim(item));
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> v;
    for (auto& x : split_list(s)) v.push_back(parse_int(x));
    return v;
}

template <class T>
std::string join(const std::vector<T>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        if constexpr (std::is_same_v<T, int>)
            s += std::to_string(v[i]);
        else
            s += fmt(v[i]);
    }
    return s;
}

struct Key {
    std::function<void(RunConfig&, const std::string&)> set;
    std::function<std::string(const RunConfig&)> get;
};

#define REAL(expr) \
    Key { [](RunConfig& c, const std::string& v) { c.expr = parse_real(v); }, [](const RunConfig& c) { return fmt(c.expr); } }
#define INT(expr) \
    Key { [](RunConfig& c, const std::string& v) { c.expr = parse_int(v); }, [](const RunConfig& c) { return std::to_string(c.expr); } }
#define BOOL(expr)                                                        \
    Key {                                                                 \
        [](RunConfig& c, const std::string& v) { c.expr = parse_bool(v); }, \
            [](const RunConfig& c) { return std::string(c.expr ? "true" : "false"); } \
    }

// ordered for dump_config
const std::vector<std::pair<std::string, Key>>& keys() {
    static const std::vector<std::pair<std::string, Key>> k = {
        {"model.kind",
         {[](RunConfig& c, const std::string& v) {
              if (v == "chafee") c.model.kind = ModelKind::ChafeeInfante;
              else if (v == "burgers") c.model.kind = ModelKind::Burgers;
              else if (v == "linear") c.model.kind = ModelKind::Linear;
              else throw ConfigError("unknown model kind: " + v);
          },
          [](const RunConfig& c) {
              switch (c.model.kind) {
                  case ModelKind::ChafeeInfante: return std::string("chafee");
                  case ModelKind::Burgers: return std::string("burgers");
                  default: return std::string("linear");
              }
          }}},
        {"model.lambda", REAL(model.ci.lambda)},
        {"model.b_amp", REAL(model.ci.b_amp)},
        {"model.b_off", REAL(model.ci.b_off)},
        {"model.odd_subspace", BOOL(model.ci.odd_subspace)},
        {"model.alpha", REAL(model.bu.alpha)},
        {"model.nu", REAL(model.bu.nu)},
        {"model.g_amp", REAL(model.bu.g_amp)},
        {"model.g_off", REAL(model.bu.g_off)},
        {"model.shift", REAL(model.lin.shift)},

        {"set.center",
         {[](RunConfig& c, const std::string& v) {
              if (v != "candidate" && v != "zero") throw ConfigError("set.center must be candidate or zero");
              c.set.center_on_candidate = v == "candidate";
          },
          [](const RunConfig& c) { return std::string(c.set.center_on_candidate ? "candidate" : "zero"); }}},
        {"set.head_modes", INT(set.head_modes)},
        {"set.radius", REAL(set.radius)},
        {"set.radius_exponent", REAL(set.radius_exponent)},
        {"set.tail_C",
         {[](RunConfig& c, const std::string& v) {
              try {
                  c.set.tail_C = parse_interval(v);
              } catch (const std::exception&) {
                  throw ConfigError("bad interval: " + v);
              }
          },
          [](const RunConfig& c) { return to_string(c.set.tail_C); }}},
        {"set.tail_s", REAL(set.tail_s)},
        {"set.verify_orbit", BOOL(set.verify_orbit)},
        {"set.candidate_method",
         {[](RunConfig& c, const std::string& v) {
              if (v == "iterate") c.set.candidate.mode = CandidateMode::Iterate;
              else if (v == "newton") c.set.candidate.mode = CandidateMode::Newton;
              else throw ConfigError("set.candidate_method must be iterate or newton");
          },
          [](const RunConfig& c) {
              return std::string(c.set.candidate.mode == CandidateMode::Newton ? "newton" : "iterate");
          }}},
        {"set.candidate_modes", INT(set.candidate.spectral.n_modes)},
        {"set.candidate_dt", REAL(set.candidate.spectral.dt)},
        {"set.candidate_tol", REAL(set.candidate.tol)},
        {"set.candidate_max_iter", INT(set.candidate.max_iter)},
        {"set.candidate_initial",
         {[](RunConfig& c, const std::string& v) {
              c.set.candidate.initial.clear();
              for (auto& x : split_list(v)) c.set.candidate.initial.push_back(parse_real(x));
          },
          [](const RunConfig& c) { return join(c.set.candidate.initial); }}},
        {"set.mode_increment", INT(set.mode_increment)},
        {"set.max_head_modes", INT(set.max_head_modes)},

        {"integrator.steps", INT(integrator.steps)},
        {"integrator.max_steps", INT(integrator.max_steps)},
        {"integrator.galerkin_modes", INT(integrator.evolution.galerkin_modes)},
        {"integrator.taylor_order", INT(integrator.evolution.taylor_order)},
        {"integrator.raise_factor", REAL(integrator.evolution.raise_factor)},
        {"integrator.s_max", REAL(integrator.evolution.s_max)},
        {"integrator.inflate", REAL(integrator.evolution.enclosure.inflate)},
        {"integrator.inflate_low", REAL(integrator.evolution.enclosure.inflate_low)},
        {"integrator.tau_min", REAL(integrator.evolution.enclosure.tau_min)},

        {"c1.enabled", BOOL(c1.enabled)},
        {"c1.norm",
         {[](RunConfig& c, const std::string& v) {
              if (v == "none") c.c1.norm = NormKind::None;
              else if (v == "c0") c.c1.norm = NormKind::C0;
              else if (v == "h2") c.c1.norm = NormKind::H2;
              else throw ConfigError("c1.norm must be none, c0 or h2");
          },
          [](const RunConfig& c) {
              switch (c.c1.norm) {
                  case NormKind::None: return std::string("none");
                  case NormKind::C0: return std::string("c0");
                  default: return std::string("h2");
              }
          }}},
        {"c1.directions",
         {[](RunConfig& c, const std::string& v) { c.c1.directions = parse_int_list(v); },
          [](const RunConfig& c) { return join(c.c1.directions); }}},
        {"c1.direction_scale_exponent", REAL(c1.direction_scale_exponent)},
        {"c1.rest_from", INT(c1.rest_from)},
        {"c1.rest_scale_exponent", REAL(c1.rest_scale_exponent)},
        {"c1.rest_s", REAL(c1.rest_s)},
        {"c1.h_modes_factor", INT(c1.h_modes_factor)},
        {"c1.steps", INT(c1.steps)},

        {"output.dir",
         {[](RunConfig& c, const std::string& v) { c.output.dir = v; },
          [](const RunConfig& c) { return c.output.dir; }}},
        {"output.name",
         {[](RunConfig& c, const std::string& v) { c.output.name = v; },
          [](const RunConfig& c) { return c.output.name; }}},
        {"output.trace_samples", INT(output.trace_samples)},
        {"output.trace_modes",
         {[](RunConfig& c, const std::string& v) { c.output.trace_modes = parse_int_list(v); },
          [](const RunConfig& c) { return join(c.output.trace_modes); }}},
    };
    return k;
}

#undef REAL
#undef INT
#undef BOOL

const Key* find_key(const std::string& full) {
    for (auto& [name, key] : keys())
        if (name == full) return &key;
    return nullptr;
}

void set_key(RunConfig& c, const std::string& full, const std::string& value) {
    const Key* k = find_key(full);
    if (!k) throw ConfigError("unknown key: " + full);
    try {
        k->set(c, value);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("bad value for " + full + ": " + value);
    }
}

void check(const RunConfig& c) {
    auto need = [](bool ok, const char* what) {
        if (!ok) throw ConfigError(what);
    };
    need(c.set.head_modes >= 1, "set.head_modes must be positive");
    need(c.set.radius > 0, "set.radius must be positive");
    need(c.set.tail_s > 1, "set.tail_s must exceed 1");
    need(c.integrator.steps >= 1, "integrator.steps must be positive");
    need(c.c1.h_modes_factor >= 1, "c1.h_modes_factor must be positive");
    if (c.model.kind == ModelKind::Burgers)
        need(c.model.bu.alpha > 0.5 && c.model.bu.alpha <= 1.0, "model.alpha must lie in (1/2, 1]");
    for (int d : c.c1.directions) need(d >= 1, "c1.directions must be positive mode numbers");
    if (c.c1.enabled && c.c1.norm != NormKind::None) {
        // the norm lemmas need sin(jx), j < rest_from, and the rest set to cover everything
        need(c.c1.rest_from >= 1, "a norm needs a rest set");
        std::vector<int> d = c.c1.directions;
        std::sort(d.begin(), d.end());
        bool cover = static_cast<int>(d.size()) == c.c1.rest_from - 1;
        for (std::size_t i = 0; cover && i < d.size(); ++i) cover = d[i] == static_cast<int>(i) + 1;
        need(cover, "c1.directions must be 1..rest_from-1 when a norm is requested");
    }
}

}  // namespace

double parse_real(const std::string& s0) {
    const std::string s = trim(s0);
    try {
        std::size_t pos = 0;
        const auto slash = s.find('/');
        if (slash != std::string::npos) {
            const double a = std::stod(s.substr(0, slash)), b = std::stod(s.substr(slash + 1), &pos);
            if (pos != s.size() - slash - 1 || b == 0) throw ConfigError("bad number: " + s);
            return a / b;
        }
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw ConfigError("bad number: " + s);
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("bad number: " + s);
    }
}

RunConfig parse_config(const std::string& text, const std::string& name) {
    static const std::vector<std::string> sections{"model", "set", "integrator", "c1", "output"};
    RunConfig c;
    c.output.name = name;
    std::istringstream in(text);
    std::string line, section;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("line " + std::to_string(no) + ": bad section header");
            section = trim(line.substr(1, line.size() - 2));
            if (std::find(sections.begin(), sections.end(), section) == sections.end())
                throw ConfigError("line " + std::to_string(no) + ": unknown section " + section);
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos || section.empty())
            throw ConfigError("line " + std::to_string(no) + ": expected key = value inside a section");
        set_key(c, section + "." + trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    check(c);
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read config: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    std::string stem = path.substr(path.find_last_of('/') + 1);
    stem = stem.substr(0, stem.find_last_of('.'));
    return parse_config(ss.str(), stem);
}

void apply_override(RunConfig& c, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) throw ConfigError("override must be key=value: " + assignment);
    std::string key = trim(assignment.substr(0, eq));
    const std::string value = trim(assignment.substr(eq + 1));
    if (key.find('.') == std::string::npos) {
        std::string found;
        for (auto& [name, k] : keys()) {
            if (name.substr(name.find('.') + 1) != key) continue;
            if (!found.empty()) throw ConfigError("ambiguous key: " + key);
            found = name;
        }
        if (found.empty()) throw ConfigError("unknown key: " + key);
        key = found;
    }
    set_key(c, key, value);
    check(c);
}

std::string dump_config(const RunConfig& c) {
    std::ostringstream os;
    std::string section;
    for (auto& [name, key] : keys()) {
        const std::string sec = name.substr(0, name.find('.'));
        if (sec != section) {
            if (!section.empty()) os << "\n";
            os << "[" << sec << "]\n";
            section = sec;
        }
        os << name.substr(name.find('.') + 1) << " = " << key.get(c) << "\n";
    }
    return os.str();
}

}  // namespace pdecert
