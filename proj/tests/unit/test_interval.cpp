#include <random>

#include "doctest.h"
#include "mpfr_oracle.hpp"
#include "pdecert/interval.hpp"

using namespace pdecert;
using oracle::Big;

namespace {

double ulp(double x) { return rnd::next_up(std::fabs(x)) - std::fabs(x); }

}  // namespace

TEST_CASE("add encloses and keeps exact cases exact") {
    Interval r = Interval(1, 2) + Interval(3, 4);
    CHECK(r.lo <= 4);
    CHECK(r.hi >= 6);
    CHECK(Interval(0.0) + Interval(-1, 1) == Interval(-1, 1));

    Interval s = Interval(0.1) + Interval(0.2);
    CHECK(oracle::strictly_in(Big(0.1) + Big(0.2), s));
    CHECK(s.width() <= 2 * ulp(0.3));
}

TEST_CASE("mul and div") {
    Interval p = Interval(-1, 2) * Interval(-3, 1);
    CHECK(p.lo <= -6);
    CHECK(p.hi >= 3);
    Interval x(-0.3, 0.7);
    CHECK(Interval(1.0) * x == x);
    Interval q = Interval(1, 2) / Interval(4, 8);
    CHECK(q.lo <= 0.125);
    CHECK(q.hi >= 0.5);
    CHECK_THROWS_AS(Interval(1.0) / Interval(-1, 1), DivisionByZeroInterval);
    CHECK_THROWS_AS(Interval(2.0, 1.0), std::invalid_argument);
}

TEST_CASE("transcendental enclosures against mpfr") {
    CHECK(exp(Interval(0.0)) == Interval(1.0));

    Interval s = sin(Interval(0.0, pi().hi));
    CHECK(s.lo <= 0.0);
    CHECK(s.hi >= 1.0);
    CHECK(s.lo >= -1e-12);
    CHECK(s.hi <= 1.0 + 1e-12);

    Interval p = pow_real(2, Interval(3.5));
    Big ref = oracle::big_exp(Big(3.5) * oracle::big_log(Big(2.0)));
    CHECK(oracle::in(ref, p));
    CHECK(p.width() < 1e-13);

    Interval e1 = expm1_div(Interval(-1.0), Interval(1.0));
    CHECK(oracle::in(Big(0.0) - oracle::big_expm1(Big(-1.0)), e1));
    CHECK(e1.width() < 1e-14);
    CHECK(expm1_div(Interval(-4.0), Interval(0.0)) == Interval(0.0));
    Interval e2 = expm1_div(Interval(2.0), Interval(1.0));
    CHECK(oracle::in(oracle::big_expm1(Big(2.0)) / Big(2.0), e2));
    CHECK_THROWS_AS(expm1_div(Interval(-1, 1), Interval(1.0)), EigenvalueContainsZero);
}

TEST_CASE("set operations") {
    CHECK(hull(Interval(0, 1), Interval(2, 3)) == Interval(0, 3));
    CHECK(*intersect(Interval(0, 2), Interval(1, 3)) == Interval(1, 2));
    CHECK_FALSE(intersect(Interval(0, 1), Interval(2, 3)).has_value());
    CHECK_FALSE(subset_interior(Interval(0, 1), Interval(0, 2)));
    CHECK(subset(Interval(0, 1), Interval(0, 2)));
    CHECK(subset_interior(Interval(0.5, 1), Interval(0, 2)));
}

TEST_CASE("random containment of exact results") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> U(-100.0, 100.0);
    std::uniform_int_distribution<int> E(-40, 40);
    int bad = 0;
    for (int t = 0; t < 100000; ++t) {
        double a = std::ldexp(U(rng), E(rng)), b = std::ldexp(U(rng), E(rng));
        Interval A(a), B(b);
        Big ba(a), bb(b);
        if (!oracle::in(ba + bb, A + B)) ++bad;
        if (!oracle::in(ba - bb, A - B)) ++bad;
        if (!oracle::in(ba * bb, A * B)) ++bad;
        if (b != 0.0 && !oracle::in(ba / bb, A / B)) ++bad;
        if (a > 0 && !oracle::in(oracle::big_sqrt(ba), sqrt(A))) ++bad;
        if (t % 10 == 0) {
            double x = U(rng) * 0.5;
            Big bx(x);
            if (!oracle::in(oracle::big_exp(bx), exp(Interval(x)))) ++bad;
            if (!oracle::in(oracle::big_sin(bx), sin(Interval(x)))) ++bad;
            if (!oracle::in(oracle::big_cos(bx), cos(Interval(x)))) ++bad;
            if (x > 0 && !oracle::in(oracle::big_log(bx), log(Interval(x)))) ++bad;
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("inclusion isotonicity and commutativity") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(-10.0, 10.0);
    auto rnd_iv = [&] {
        double a = U(rng), b = U(rng);
        return Interval(std::min(a, b), std::max(a, b));
    };
    for (int t = 0; t < 2000; ++t) {
        Interval A = rnd_iv(), B = rnd_iv();
        Interval As = Interval(A.lo + 0.25 * A.width(), A.hi - 0.25 * A.width());
        CHECK(subset(As + B, A + B));
        CHECK(subset(As * B, A * B));
        CHECK(subset(sin(As), sin(A)));
        CHECK(subset(exp(As), exp(A)));
        CHECK(A + B == B + A);
        CHECK(A * B == B * A);
    }
}

TEST_CASE("sin range over wide arguments") {
    CHECK(sin(Interval(0, 10)) == Interval(-1, 1));
    Interval c = cos(Interval(-0.1, 0.1));
    CHECK(c.hi == 1.0);
    CHECK(c.lo < std::cos(0.1));
    Interval q = sin(Interval(0.5 * pi().hi));
    CHECK(q.hi == 1.0);
}

TEST_CASE("text form round trip") {
    Interval a(0.1, 0.30000000000000004);
    CHECK(parse_interval(to_string(a)) == a);
    CHECK(to_string(Interval(1.0)) == "[1,1]");
}
