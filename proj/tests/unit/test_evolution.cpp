#include <cmath>
#include <random>

#include "doctest.h"
#include "mpfr_oracle.hpp"
#include "oracle.hpp"
#include "pdecert/approx.hpp"
#include "pdecert/evolution.hpp"

using namespace pdecert;

namespace {

TailVector orbit_set() {
    std::vector<Interval> head(8, Interval(0.0));
    const double c[] = {1.2703, 4.30299e-2, 1.63332e-3, 6.25849e-5};
    for (int i = 0; i < 4; ++i) head[2 * i] = Interval(c[i]) + Interval(-1e-4, 1e-4);
    return TailVector::from_head(Basis::Sine, head, Interval(-1, 1), 4, Parity::Odd);
}

double ulps(const Interval& x) { return x.width() / (std::nextafter(x.mag(), 1e300) - x.mag()); }

// mode k of sum_j sin(jx) with unit coefficients for j >= 4 truncated at M
Coeffs unit_tail(int M) {
    Coeffs c(M, 0.0);
    for (int k = 4; k <= M; ++k) c[k - 1] = 1.0;
    return c;
}

}  // namespace

TEST_CASE("linear model steps match the exact flow") {
    Model m = Model::linear({0.5});
    TailVector X = TailVector::from_head(Basis::Sine, {1.0, -0.5, 0.25, 0.125});
    const double tau = 1.0 / 256;
    StepReport r = step(m, TimeBox(0.0, tau), X);
    CHECK(r.tau == tau);
    for (int k = 1; k <= 4; ++k) {
        oracle::Big lam(0.5 - k * k), x(X.head[k - 1].lo);
        oracle::Big exact = oracle::big_exp(lam * oracle::Big(tau)) * x;
        CHECK(oracle::in(exact, r.output.head[k - 1]));
        CHECK(ulps(r.output.head[k - 1]) <= 8.0);
    }
    CHECK(r.output.C.is_zero());
}

TEST_CASE("linear model: half steps compose") {
    Model m = Model::linear({0.0});
    TailVector X = TailVector::from_head(Basis::Sine, {Interval(0.9, 1.1), 0.3, Interval(-0.1, 0.1)}, unit(), 3);
    IntegrationReport one = integrate(m, 0.0, 0.25, X, 1);
    IntegrationReport two = integrate(m, 0.0, 0.25, X, 2);
    CHECK(one.steps == 1);
    CHECK(two.steps == 2);
    for (int k = 1; k <= 3; ++k) {
        CHECK(std::fabs(one.output.head[k - 1].lo - two.output.head[k - 1].lo) <= 1e-12);
        CHECK(std::fabs(one.output.head[k - 1].hi - two.output.head[k - 1].hi) <= 1e-12);
    }
    StepReport s = step(m, TimeBox(0.0, 0.25), X);
    for (int k = 1; k <= 3; ++k) CHECK(s.output.head[k - 1] == one.output.head[k - 1]);
}

TEST_CASE("tail factors dominate brute force") {
    Model mc = Model::chafee({});
    BurgersParams bp;
    bp.alpha = 0.75;
    Model mb = Model::burgers(bp);
    for (const Model* m : {&mc, &mb}) {
        for (double tau : {1.0 / 512, 1.0 / 64, 0.25}) {
            for (int n : {4, 8, 20}) {
                for (double d : {0.0, 0.5, 1.0, 1.5}) {
                    double dec = 0.0, duh = 0.0;
                    for (long k = n + 1; k < 200000; ++k) {
                        const double lam = m->kind == ModelKind::Burgers ? -std::pow(double(k), 1.5) : 2.0 - double(k) * k;
                        dec = std::max(dec, std::pow(double(k), d) * std::exp(tau * lam));
                        if (d <= m->gamma()) duh = std::max(duh, std::pow(double(k), d) * std::expm1(tau * lam) / lam);
                    }
                    CHECK(sup_decay(*m, n, tau, d) >= dec * (1 - 1e-12));
                    if (d <= m->gamma()) CHECK(sup_duhamel(*m, n, tau, d) >= duh * (1 - 1e-12));
                }
            }
        }
    }
    CHECK_THROWS(sup_duhamel(mc, 4, 0.01, 2.5));
}

TEST_CASE("single step equals a one-step integration") {
    Model m = Model::chafee({});
    TailVector X = orbit_set();
    StepReport s = step(m, TimeBox(0.0, 1.0 / 256), X);
    IntegrationReport r = integrate(m, 0.0, 1.0 / 256, X, 1);
    CHECK(to_certificate(s.output) == to_certificate(r.output));
}

TEST_CASE("oracle members stay inside; exponents move within the ledger") {
    Model m = Model::chafee({});
    TailVector X = orbit_set();
    std::vector<double> ds;
    IntegrationReport r = integrate(m, 0.0, 0.25, X, 64, {}, [&](const StepDiagnostics& d, const StepDiagnostics*) {
        ds.push_back(d.s_out - d.s_in);
    });
    for (double d : ds) {
        CHECK(d <= 2.0);
        CHECK(d >= 0.0);  // no derivative loss in the cubic model
    }
    std::mt19937_64 rng(7);
    const int M = 32;
    for (int i = 0; i < 50; ++i) {
        std::vector<double> x = oracle::sample_member(X, M, rng);
        Coeffs u0(x.begin() + 1, x.end());
        Coeffs u1 = spectral_integrate(m, 0.0, 0.25, u0, {M, 1.0 / 4096});
        for (int k = 1; k <= M; ++k) {
            // the oracle is not rigorous; 1e-10 covers RK4 and truncation error
            Interval b = r.output.coeff(k) + ball(1e-10);
            CHECK(b.contains(u1[k - 1]));
        }
    }
}

TEST_CASE("widening the input widens the output") {
    Model m = Model::chafee({});
    TailVector X = orbit_set();
    TailVector Xw = vadd(X, TailVector::from_head(Basis::Sine, {ball(1e-5)}, Interval(0.0), 4, Parity::Odd));
    IntegrationReport a = integrate(m, 0.0, 1.0 / 16, X, 16), b = integrate(m, 0.0, 1.0 / 16, Xw, 16);
    for (int k = 1; k <= 8; k += 2) CHECK(b.output.head[k - 1].width() >= a.output.head[k - 1].width());
}

TEST_CASE("chafee lambda=2 period map") {
    Model m = Model::chafee({});
    TailVector X = orbit_set();
    IntegrationReport r = integrate(m, 0.0, 1.0, X, 256);
    CHECK(vsubset(r.output, X));
    // deviation of mode 1 from the centre, compared with 1e-5 [-1.64257, 1.85394]
    Interval dev = r.output.head[0] - Interval(1.2703);
    CHECK(dev.lo >= -3 * 1.64257e-5);
    CHECK(dev.hi <= 3 * 1.85394e-5);
    CHECK(r.output.s > X.s);
}

TEST_CASE("variational: zero direction stays zero") {
    Model m = Model::chafee({});
    VarPair v{orbit_set(), TailVector::zero(Basis::Sine, 8, 4)};
    VarIntegrationReport r = integrate_variational(m, 0.0, 1.0 / 16, v, 16);
    for (auto& x : r.output.h.head) CHECK(x.is_zero());
    CHECK(r.output.h.C.is_zero());
}

TEST_CASE("variational: decoupled flow around the zero set") {
    ChafeeInfanteParams p;
    p.lambda = 5;
    p.odd_subspace = false;
    Model m = Model::chafee(p);
    std::vector<Interval> u(8, Interval(-1e-3, 1e-3));
    TailVector U = TailVector::from_head(Basis::Sine, u, unit(), 5);
    std::vector<Interval> h(8, Interval(0.0));
    h[1] = 1.0;
    VarIntegrationReport r = integrate_variational(m, 0.0, 1.0, {U, TailVector::from_head(Basis::Sine, h)}, 256);
    const Interval e2 = r.output.h.head[1];
    CHECK(e2.contains(std::exp(1.0)));
    CHECK(e2.width() <= 10 * (2.71846 - 2.71768));

    // exactly zero u: the variational flow is e^{(5 - k^2) t}
    TailVector Z = TailVector::zero(Basis::Sine, 8, 5);
    VarIntegrationReport z = integrate_variational(m, 0.0, 0.5, {Z, TailVector::from_head(Basis::Sine, h)}, 128);
    CHECK(z.output.h.head[1].contains(std::exp(0.5)));
    CHECK(z.output.h.head[1].width() < 1e-12);
    CHECK(z.output.h.head[0].is_zero());
}

TEST_CASE("variational: finite differences at a point of the orbit") {
    Model m = Model::chafee({});
    Coeffs c = find_periodic_candidate(m);
    std::vector<Interval> uh(8, Interval(0.0)), hh(8, Interval(0.0));
    for (int k = 1; k <= 8; k += 2) uh[k - 1] = c[k - 1];
    hh[0] = 1.0;
    // the point u is the 8-mode truncation of the candidate, an exact member
    TailVector U = TailVector::from_head(Basis::Sine, uh, Interval(0.0), 4, Parity::Odd);
    VarIntegrationReport r = integrate_variational(m, 0.0, 1.0, {U, TailVector::from_head(Basis::Sine, hh)}, 256);
    const double eps = 1e-6;
    Coeffs u0(32, 0.0), u1(32, 0.0);
    for (int k = 1; k <= 8; ++k) u0[k - 1] = u1[k - 1] = uh[k - 1].lo;
    u1[0] += eps;
    Coeffs a = spectral_integrate(m, 0.0, 1.0, u0), b = spectral_integrate(m, 0.0, 1.0, u1);
    for (int k = 1; k <= 8; ++k) {
        const double q = (b[k - 1] - a[k - 1]) / eps;
        CHECK((r.output.h.coeff(k) + ball(100 * eps)).contains(q));
    }
}

TEST_CASE("variational: unbounded direction set") {
    Model m = Model::chafee({});
    std::vector<Interval> hh(8, Interval(0.0));
    for (int k = 4; k <= 8; ++k) hh[k - 1] = unit();
    TailVector H = TailVector::from_head(Basis::Sine, hh, unit(), 0.0);
    VarIntegrationReport r = integrate_variational(m, 0.0, 1.0, {orbit_set(), H}, 256);
    CHECK(r.output.h.bounded());
    CHECK(r.output.h.s > 1.0);
    // mode 1 within 3x of 1e-3 [-2.18135, 2.18131]
    CHECK(r.output.h.head[0].mag() <= 3 * 2.18135e-3);
    // any single truncated member, pushed through the oracle's linearization, lands inside
    std::vector<Interval> uh(8, Interval(0.0));
    const double cc[] = {1.2703, 4.30299e-2, 1.63332e-3, 6.25849e-5};
    for (int i = 0; i < 4; ++i) uh[2 * i] = cc[i];
    Coeffs u0(32, 0.0), u1(32, 0.0), hd = unit_tail(32);
    for (int k = 1; k <= 8; ++k) u0[k - 1] = uh[k - 1].lo;
    const double eps = 1e-7;
    for (int k = 0; k < 32; ++k) u1[k] = u0[k] + eps * hd[k] / std::pow(k + 1.0, 2);
    Coeffs a = spectral_integrate(m, 0.0, 1.0, u0), b = spectral_integrate(m, 0.0, 1.0, u1);
    for (int k = 1; k <= 8; ++k) CHECK((r.output.h.coeff(k) + ball(1e-4)).contains((b[k - 1] - a[k - 1]) / eps));
}
