// Acceptance run: one PASS/FAIL line per criterion. The process exits 0 once every
// criterion has been evaluated, whatever the verdicts; the lines carry the result.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "conv_check.hpp"
#include "mpfr_oracle.hpp"
#include "pdecert/proof_engine.hpp"

using namespace pdecert;

namespace {

// tolerances
constexpr int kConvConfigs = 12;
constexpr int kConvPairs = 500;
constexpr int kConvModes = 2000;
constexpr double kConvSeconds = 120;
constexpr long kTailTerms = 1000000;
constexpr double kTailSlack = 1.01;
constexpr double kTailSeconds = 30;
constexpr int kLinearSteps = 256;
constexpr double kLinearUlps = 8;
constexpr double kZeroWidthFactor = 10;
constexpr double kZeroSeconds = 300;
constexpr double kChafeeTarget = 0.9;
constexpr double kChafeeSeconds = 1800;
constexpr double kBurgersSlack = 0.15;
constexpr double kBurgersSeconds = 3600;
constexpr double kLinearityUlps = 4;
constexpr double kFdEps = 1e-6;
constexpr double kFdInflate = 1e-4;

using clock_type = std::chrono::steady_clock;

double since(clock_type::time_point t0) { return std::chrono::duration<double>(clock_type::now() - t0).count(); }

int failures = 0;

void line(int n, bool pass, const std::string& what) {
    if (!pass) ++failures;
    std::printf("criterion %2d: %s  %s\n", n, pass ? "PASS" : "FAIL", what.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, auto... a) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, a...);
    return buf;
}

RunConfig config(const std::string& dir, const std::string& name) { return load_config(dir + "/" + name + ".cfg"); }

// ---- 1 ----

std::vector<Interval> random_head(int n, std::mt19937_64& rng, double width) {
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::vector<Interval> h(n);
    for (auto& x : h) {
        const double c = U(rng);
        x = Interval(c - width, c + width);
    }
    return h;
}

TailVector random_vector(Basis b, int n, double s, std::mt19937_64& rng) {
    TailVector v = TailVector::from_head(b, random_head(n, rng, 0.01), Interval(-1, 1), s);
    if (b == Basis::Cosine) v.c0 = Interval(0.4, 0.6);
    return v;
}

void criterion1() {
    using oracle::ConvKind;
    struct Grid {
        ConvKind kind;
        const char* name;
        std::vector<std::pair<double, double>> s;  // (s1, s2)
    };
    const std::vector<Grid> grids = {
        {ConvKind::SinSin, "conv_sin_sin", {{1.5, 1.5}, {2, 2}, {2, 3}, {3, 4}, {4, 4}, {1.5, 4}}},
        {ConvKind::CosSin, "conv_cos_sin", {{1.5, 1.5}, {2, 2}, {2, 3}, {3, 4}, {4, 4}, {4, 1.5}}},
        {ConvKind::CosSinUnbounded, "conv_cos_sin_unbounded", {{3, 0}, {3, -0.5}, {4, -1}, {4, 0}, {5, -2}, {6, -3}}},
        {ConvKind::CosSinSlow, "conv_cos_sin_slow", {{2.5, 0.5}, {3, 1}, {3, 0.25}, {4, 1}, {5, 0.75}, {2.2, 1}}},
    };
    const auto t0 = clock_type::now();
    std::mt19937_64 rng(2024);
    long bad = 0, pairs = 0;
    int configs_min = 1 << 30;
    std::string per;
    for (const Grid& g : grids) {
        int configs = 0;
        long gbad = 0;
        for (auto [s1, s2] : g.s) {
            for (int n : {4, 10}) {
                const Basis b1 = g.kind == ConvKind::SinSin ? Basis::Sine : Basis::Cosine;
                TailVector u = random_vector(b1, n, s1, rng), v = random_vector(Basis::Sine, n, s2, rng);
                gbad += oracle::conv_violations(g.kind, u, v, kConvModes, kConvPairs, rng);
                pairs += kConvPairs;
                ++configs;
            }
        }
        bad += gbad;
        configs_min = std::min(configs_min, configs);
        per += fmt(" %s:%ld", g.name, gbad);
    }
    const double t = since(t0);
    line(1, bad == 0 && configs_min >= kConvConfigs && t <= kConvSeconds,
         fmt("convolution oracle: %ld violations over %ld pairs (%d configs per lemma, modes <= %d;%s) in %.1fs "
             "(need 0 and <= %.0fs)",
             bad, pairs, configs_min, kConvModes, per.c_str(), t, kConvSeconds));
}

// ---- 2 ----

void criterion2() {
    const auto t0 = clock_type::now();
    const double ss[] = {1.5, 2, 3, 4, 5};
    const long ns[] = {8, 20, 100, 1000};
    bool dominate = true;
    double worst = 0;
    std::string off;
    for (double s : ss) {
        for (long n : ns) {
            const double bound = tail_sum_bound(Interval(1.0), s, n).hi;
            const double partial = oracle::partial_tail(s, n, kTailTerms);
            const double rem = std::pow(double(kTailTerms) + 0.5, 1 - s) / (s - 1);  // sum over i > 1e6, midpoint rule
            if (!(bound >= partial)) dominate = false;
            const double ratio = bound / (partial + rem);
            const double allowed = s / (s - 1) * kTailSlack;
            worst = std::max(worst, ratio / allowed);
            if (ratio > allowed) off += fmt(" (s=%g,n=%ld: %.4f > %.4f)", s, n, ratio, allowed);
        }
    }
    const double t = since(t0);
    line(2, dominate && off.empty() && t <= kTailSeconds,
         fmt("tail_sum_bound dominates partial sums to %ld terms: %s; over-estimate within s/(s-1)*%.2f: %s%s; "
             "%.1fs",
             kTailTerms, dominate ? "yes" : "no", kTailSlack, off.empty() ? "yes" : "no", off.c_str(), t));
}

// ---- 3 ----

void criterion3() {
    Model m = Model::linear({0.5});
    const std::vector<double> x0 = {1.0, -0.5, 0.25, 0.125};
    TailVector X = TailVector::from_head(Basis::Sine, std::vector<Interval>(x0.begin(), x0.end()));
    IntegrationReport r = integrate(m, 0.0, 1.0, X, kLinearSteps);
    bool ok = r.steps == kLinearSteps && r.output.C.is_zero();
    double worst = 0;
    for (int k = 1; k <= 4; ++k) {
        oracle::Big exact = oracle::big_exp(oracle::Big(0.5 - double(k) * k)) * oracle::Big(x0[k - 1]);
        const double e = exact.to_double();
        const double ulp = std::nextafter(std::fabs(e), 1e300) - std::fabs(e);
        const Interval& y = r.output.head[k - 1];
        const double dev = std::max(std::fabs(y.lo - e), std::fabs(y.hi - e)) / ulp;
        worst = std::max(worst, dev);
        if (!oracle::in(exact, y) || dev > kLinearUlps) ok = false;
    }
    line(3, ok,
         fmt("linear model after %d composed steps: exact e^{lambda t} x contained, endpoints within %.1f ulp "
             "(need <= %.0f)",
             kLinearSteps, worst, kLinearUlps));
}

// ---- 4 ----

void criterion4(const std::string& dir) {
    const auto t0 = clock_type::now();
    RunConfig c = config(dir, "chafee_lambda5_zero");
    ProofCertificate p = certify(c, 1);
    const double ref_width[] = {54.6091 - 54.5786, 2.71846 - 2.71768, (1.83168 - 1.83116) * 1e-2};
    bool ok = p.directions.size() >= 3;
    std::string detail;
    for (int k = 1; k <= 3 && ok; ++k) {
        if (!p.directions[k - 1].result) {
            ok = false;
            break;
        }
        const Interval y = p.directions[k - 1].result->coeff(k);
        const oracle::Big exact = oracle::big_exp(oracle::Big(5.0 - k * k));
        const bool in = oracle::in(exact, y);
        const double ratio = y.width() / ref_width[k - 1];
        ok = ok && in && ratio <= kZeroWidthFactor;
        detail += fmt(" k=%d %s width %.3gx reference;", k, in ? "contains" : "MISSES", ratio);
    }
    const double t = since(t0);
    ok = ok && t <= kZeroSeconds;
    line(4, ok, fmt("zero linearization, lambda=5:%s %.1fs (need contains, <= %.0fx, <= %.0fs)", detail.c_str(), t,
                    kZeroWidthFactor, kZeroSeconds));
}

// ---- 5, 6, 10 ----

std::string chafee_certificate;

void chafee(int n, const std::string& dir, const std::string& name, double target) {
    const auto t0 = clock_type::now();
    RunConfig c = config(dir, name);
    ProofCertificate p = certify(c, 1);
    if (n == 5) chafee_certificate = certificate_text(p);
    const double t = since(t0);
    const bool ok = p.orbit.contained && p.norm && p.norm->hi < 1.0 && p.norm->hi <= target && t <= kChafeeSeconds;
    line(n, ok,
         fmt("%s: orbit %s, C0 norm bound %.6f (need < 1 and <= %.2f), %.1fs", name.c_str(),
             p.orbit.contained ? "contained" : "not contained", p.norm ? p.norm->hi : NAN, target, t));
}

void criterion10(const std::string& dir) {
    RunConfig c = config(dir, "chafee_lambda2_b05");
    const std::string a = chafee_certificate.empty() ? certificate_text(certify(c, 1)) : chafee_certificate;
    const std::string b = certificate_text(certify(c, 4));
    line(10, a == b && !a.empty(),
         fmt("certificates with 1 and 4 threads are %s (%zu bytes)", a == b ? "byte-identical" : "different",
             a.size()));
}

// ---- 7 ----

void criterion7(const std::string& dir) {
    const auto t0 = clock_type::now();
    struct Row {
        const char* cfg;
        double ref;
        bool attracting;
    };
    const Row rows[] = {{"burgers_alpha_64_64", 0.527725, true},
                        {"burgers_alpha_60_64", 0.572615, true},
                        {"burgers_alpha_56_64", 0.631160, true},
                        {"burgers_alpha_43_64", 1.013750, false}};
    bool ok = true;
    std::string detail;
    for (const Row& r : rows) {
        RunConfig c = config(dir, r.cfg);
        ProofCertificate p = certify(c, 1);
        const double norm = p.norm ? p.norm->hi : NAN;
        bool row_ok;
        if (r.attracting)
            row_ok = p.orbit.contained && p.attracting && norm < 1.0 && norm <= r.ref + kBurgersSlack;
        else
            row_ok = p.orbit.contained && (!p.attracting || !(norm <= 1.0));
        ok = ok && row_ok;
        detail += fmt(" %s[%d modes]: orbit %s, norm %.6f vs %.6f, attraction %s%s;", r.cfg + 14,
                      c.set.head_modes, p.orbit.contained ? "validated" : "NOT validated", norm, r.ref,
                      p.attracting ? "validated" : "not validated", row_ok ? "" : " (mismatch)");
        std::printf("    %s: C0 %.1fs C1 %.1fs\n", r.cfg, p.c0_seconds, p.c1_seconds);
    }
    const double t = since(t0);
    ok = ok && t <= kBurgersSeconds;
    line(7, ok, fmt("burgers sweep head:%s %.0fs (need <= %.0fs; rows alpha <= 45/64 other than 43/64 skipped)",
                    detail.c_str(), t, kBurgersSeconds));
}

// ---- 8, 9 ----

TailVector orbit_point(const Model& m) {
    Coeffs c = find_periodic_candidate(m);
    std::vector<Interval> uh(8, Interval(0.0));
    for (int k = 1; k <= 8; k += 2) uh[k - 1] = c[k - 1];
    return TailVector::from_head(Basis::Sine, uh, Interval(0.0), 4, Parity::Odd);
}

TailVector h_vector(double a, double b) {
    std::vector<Interval> h(8, Interval(0.0));
    h[0] = a;
    h[2] = b;
    return TailVector::from_head(Basis::Sine, h);
}

Interval widen(const Interval& x, double ulps) {
    double lo = x.lo, hi = x.hi;
    for (int i = 0; i < ulps; ++i) lo = std::nextafter(lo, -1e300), hi = std::nextafter(hi, 1e300);
    return Interval(lo, hi);
}

void criterion8() {
    Model m = Model::chafee({});
    const TailVector U = orbit_point(m);
    const int steps = 256;
    const TailVector W1 = run_c1_direction(m, U, h_vector(1, 0), steps);
    const TailVector W3 = run_c1_direction(m, U, h_vector(0, 1), steps);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> D(-1.0, 1.0);
    int bad = 0, samples = 4, disjoint = 0;
    double worst = 0;
    for (int i = 0; i < samples; ++i) {
        const double a = D(rng), b = D(rng);
        const TailVector W = run_c1_direction(m, U, h_vector(a, b), steps);
        TailVector comb = vadd(vscale(W1, Interval(a)), vscale(W3, Interval(b)));
        for (auto& x : comb.head) x = widen(x, kLinearityUlps);
        comb.C = widen(comb.C, kLinearityUlps);
        if (!vsubset(W, comb)) ++bad;
        for (int k = 1; k <= W.n(); ++k) {
            const Interval w = W.coeff(k), c = comb.coeff(k);
            if (!intersect(w, c)) ++disjoint;
            // excess of the direct result over the combination, in units of the combination's width
            const double ex = std::max(c.lo - w.lo, w.hi - c.hi);
            if (c.width() > 0) worst = std::max(worst, ex / c.width());
        }
    }
    line(8, bad == 0,
         fmt("C1 linearity at a point: %d of %d sampled combinations inside a W1 + b W3 widened by %.0f ulp "
             "(largest excess %.3g of the combination width, %d disjoint coefficients)",
             samples - bad, samples, kLinearityUlps, worst, disjoint));
}

void criterion9() {
    Model m = Model::chafee({});
    const TailVector U = orbit_point(m);
    const TailVector W = run_c1_direction(m, U, h_vector(1, 0), 256);
    const int M = 32;
    Coeffs u0(M, 0.0);
    for (int k = 1; k <= 8; ++k) u0[k - 1] = U.head[k - 1].lo;
    Coeffs u1 = u0;
    u1[0] += kFdEps;
    const Coeffs a = spectral_integrate(m, 0.0, 1.0, u0), b = spectral_integrate(m, 0.0, 1.0, u1);
    int bad = 0;
    for (int k = 1; k <= M; ++k) {
        const double q = (b[k - 1] - a[k - 1]) / kFdEps;
        if (!(W.coeff(k) + ball(kFdInflate)).contains(q)) ++bad;
    }
    line(9, bad == 0,
         fmt("difference quotient (eps=%g) inside the C1 enclosure + %g for %d of %d modes", kFdEps, kFdInflate,
             M - bad, M));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::string dir = "configs";
    std::vector<int> only;
    app.add_option("--configs", dir, "directory with the shipped configs");
    app.add_option("--only", only, "run only these criteria")->delimiter(',');
    CLI11_PARSE(app, argc, argv);
    const std::set<int> sel(only.begin(), only.end());
    auto want = [&](int n) { return sel.empty() || sel.count(n); };

    auto guarded = [&](int n, auto&& f) {
        if (!want(n)) return;
        try {
            f();
        } catch (const std::exception& e) {
            line(n, false, std::string("error: ") + e.what());
        }
    };
    const auto t0 = clock_type::now();
    guarded(1, [] { criterion1(); });
    guarded(2, [] { criterion2(); });
    guarded(3, [] { criterion3(); });
    guarded(4, [&] { criterion4(dir); });
    guarded(5, [&] { chafee(5, dir, "chafee_lambda2_b05", kChafeeTarget); });
    guarded(6, [&] { chafee(6, dir, "chafee_lambda2_b15", 1.0); });
    guarded(7, [&] { criterion7(dir); });
    guarded(8, [] { criterion8(); });
    guarded(9, [] { criterion9(); });
    guarded(10, [&] { criterion10(dir); });
    std::printf("acceptance: %d criteria failed, %.0fs total\n", failures, since(t0));
    return 0;
}
