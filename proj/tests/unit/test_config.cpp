#include <fstream>
#include <sstream>

#include "doctest.h"
#include "pdecert/config.hpp"

using namespace pdecert;

#ifndef PDECERT_CONFIG_DIR
#define PDECERT_CONFIG_DIR "configs"
#endif

TEST_CASE("fractions and decimals") {
    CHECK(parse_real("43/64") == 0.671875);
    CHECK(parse_real(" 1e-4 ") == 1e-4);
    CHECK_THROWS_AS(parse_real("1/0"), ConfigError);
    CHECK_THROWS_AS(parse_real("abc"), ConfigError);
}

TEST_CASE("sections, comments, values") {
    RunConfig c = parse_config(
        "# comment\n[model]\nkind = burgers   # trailing\nalpha = 60/64\n[set]\nhead_modes = 20\n"
        "tail_C = [-1e-5, 1e-5]\n[c1]\nnorm = h2\ndirections = 1, 2\nrest_from = 3\n",
        "x");
    CHECK(c.model.kind == ModelKind::Burgers);
    CHECK(c.model.bu.alpha == 60.0 / 64);
    CHECK(c.set.head_modes == 20);
    CHECK(c.set.tail_C == Interval(-1e-5, 1e-5));
    CHECK(c.c1.norm == NormKind::H2);
    CHECK(c.c1.directions == std::vector<int>{1, 2});
    CHECK(c.output.name == "x");
}

TEST_CASE("config errors") {
    CHECK_THROWS_AS(parse_config("[model]\nnope = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[nowhere]\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("kind = chafee\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[model]\nkind = heat\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[set]\ntail_s = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[model]\nkind = burgers\nalpha = 1/2\n"), ConfigError);
    // a norm needs directions 1..rest_from-1
    CHECK_THROWS_AS(parse_config("[c1]\ndirections = 1, 3\nrest_from = 4\n"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/file.cfg"), ConfigError);
}

TEST_CASE("dump round trip and the reference config") {
    RunConfig c = parse_config("[model]\nkind = burgers\nalpha = 43/64\n[set]\ncandidate_initial = 0, 1.5\n", "r");
    CHECK(dump_config(parse_config(dump_config(c), "r")) == dump_config(c));
    RunConfig ref = load_config(std::string(PDECERT_CONFIG_DIR) + "/reference.cfg");
    RunConfig def;
    CHECK(dump_config(ref) == dump_config(def));
}

TEST_CASE("overrides") {
    RunConfig c;
    apply_override(c, "integrator.steps=512");
    apply_override(c, "radius = 1e-5");
    CHECK(c.integrator.steps == 512);
    CHECK(c.set.radius == 1e-5);
    CHECK_THROWS_AS(apply_override(c, "steps=3"), ConfigError);  // integrator.steps or c1.steps
    CHECK_THROWS_AS(apply_override(c, "bogus=3"), ConfigError);
}
