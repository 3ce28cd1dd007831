#include <cmath>

#include "doctest.h"
#include "pdecert/approx.hpp"

using namespace pdecert;

TEST_CASE("linear model decays analytically") {
    Model m = Model::linear({0.5});
    SpectralOptions o{8, 1.0 / 4096};
    Coeffs u0{1.0, -0.5, 0.25, 0.0, 0.1, 0, 0, 0};
    Coeffs u = spectral_integrate(m, 0.0, 1.0, u0, o);
    for (int k = 1; k <= 8; ++k) CHECK(std::fabs(u[k - 1] - std::exp(0.5 - k * k) * u0[k - 1]) < 1e-10);
}

TEST_CASE("rk4 converges with order four") {
    Model m = Model::chafee({});
    Coeffs u0{1.2, 0, 0.05};
    auto run = [&](double dt) { return spectral_integrate(m, 0.0, 1.0, u0, {16, dt})[0]; };
    const double a = run(1.0 / 256), b = run(1.0 / 512), c = run(1.0 / 1024);
    CHECK(std::log2(std::fabs(a - b) / std::fabs(b - c)) >= 3.5);
}

TEST_CASE("blow up is reported") {
    ChafeeInfanteParams p;
    p.b_amp = 0.0;
    p.b_off = -1.0;  // u^3 with the wrong sign
    CHECK_THROWS_AS(spectral_integrate(Model::chafee(p), 0.0, 5.0, {3.0}, {8, 1.0 / 1024}), BlowUpDetected);
}

TEST_CASE("chafee periodic candidate by iteration") {
    Model m = Model::chafee({});
    Coeffs c = find_periodic_candidate(m);
    CHECK(std::fabs(c[0] - 1.2703) < 1e-2);
    CHECK(std::fabs(c[2] - 0.0430299) < 1e-2);
    CHECK(time1_defect(m, c) < 1e-8);
}

TEST_CASE("unstable orbit by newton") {
    ChafeeInfanteParams p;
    p.lambda = 5;
    p.b_amp = 1.5;
    p.odd_subspace = false;
    Model m = Model::chafee(p);
    CandidateOptions o;
    o.mode = CandidateMode::Newton;
    o.spectral.n_modes = 16;
    o.initial = Coeffs(16, 0.0);
    o.initial[1] = 1.5;
    Coeffs c = find_periodic_candidate(m, o);
    CHECK(std::fabs(c[1] - 1.55005) < 1e-2);
    CHECK(time1_defect(m, c, o.spectral) < 1e-8);
    auto ev = approx_spectrum(m, c, 3, o.spectral);
    CHECK(std::fabs(ev[0].value - 9.39278) < 1e-2);
    CHECK(std::fabs(ev[1].value - 0.141303) < 1e-3);
}

TEST_CASE("linear decay candidate is zero") {
    Model m = Model::linear({-0.5});
    CandidateOptions o;
    o.spectral.n_modes = 8;
    for (double x : find_periodic_candidate(m, o)) CHECK(std::fabs(x) < 1e-10);
}

TEST_CASE("spectrum around zero is diagonal") {
    ChafeeInfanteParams p;
    p.lambda = 5;
    p.odd_subspace = false;
    auto ev = approx_spectrum(Model::chafee(p), Coeffs(16, 0.0), 3, {16, 1.0 / 4096});
    const double expect[] = {std::exp(4.0), std::exp(1.0), std::exp(-4.0)};
    for (int i = 0; i < 3; ++i) {
        CHECK(ev[i].value == doctest::Approx(expect[i]).epsilon(1e-8));
        for (int k = 0; k < 16; ++k) CHECK(std::fabs(ev[i].vector[k] - (k == i ? 1.0 : 0.0)) < 1e-8);
    }
}
