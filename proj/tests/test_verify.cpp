#include "heis/config.hpp"
#include "heis/errors.hpp"
#include "heis/suites.hpp"
#include "heis/verify.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

using namespace heis;

TEST_CASE("defect reports") {
    const auto r = DefectReport::make("x", 1e-9, 1e-8, {{"k", 1}});
    CHECK(r.pass);
    CHECK_FALSE(DefectReport::make("x", 2e-8, 1e-8).pass);
    CHECK_THROWS_AS(DefectReport::make("x", std::nan(""), 1.0), NonFinite);
    const auto j = to_json(r);
    CHECK(j["name"] == "x");
    CHECK(j["metadata"]["k"] == 1);
    CHECK(to_json(HeisenbergElement{1, 2, 3}).dump() == "[1.0,2.0,3.0]");
}

TEST_CASE("relative defects") {
    CHECK(relative(0.0, 0.0) == 0.0);
    CHECK(relative(1.0, 0.0) == std::numeric_limits<double>::max());
    CHECK(relative(1.0, 4.0) == 0.25);
}

TEST_CASE("identity intertwining is exact") {
    const ReprParams p{1.0, 1.0};
    const auto G = GridSpec1D::centered(8.0, 2048);
    const auto f = vacuum_gaussian(p, G);
    const LatticeParams L{1, 1.0};
    const auto Z = [&](const SampledLine &v) { return covariant_zak(L, v, 128, 128); };
    const auto r = intertwining_defect(
        "id", [&](const HeisenbergElement &g, const SampledLine &v) { return act_schrodinger(p, g, v); }, Z,
        [&](const HeisenbergElement &g, const TorusField &v) { return act_lattice(L, g, v); }, identity(), f, 1e-14);
    CHECK(r.pass);
    CHECK(r.metadata["g"].dump() == "[0.0,0.0,0.0]");
}

TEST_CASE("negative control inverts the verdict") {
    CHECK(negative_control(DefectReport::make("a", 1e-3, 1e-5)).pass);
    CHECK_FALSE(negative_control(DefectReport::make("a", 1e-7, 1e-5)).pass);
    CHECK(negative_control(DefectReport::make("a", 1e-3, 1e-5)).name == "control.a");
}

TEST_CASE("chirp perturbation") {
    const auto G = GridSpec1D::centered(2.0, 16);
    const auto f = sample([](double) { return cplx{1.0}; }, G);
    const auto c = chirp(f, 0.5);
    CHECK(std::abs(c[0] - std::polar(1.0, 0.5 * 4.0)) < 1e-15);
}

TEST_CASE("config defaults, overrides and validation") {
    RunConfig c;
    CHECK_NOTHROW(c.validate());
    CHECK(c.tol("intertwining") == 1e-5);
    c.set("n", "4096");
    c.set("hbar", "2.5");
    CHECK(c.n == 4096);
    CHECK(c.hbar == 2.5);
    CHECK_NOTHROW(c.validate());
    CHECK_THROWS_AS(c.set("bogus", "1"), ConfigError);
    CHECK_THROWS_AS(c.set("n", "12x"), ConfigError);
    c.set("n", "1000");
    CHECK_THROWS_AS(c.validate(), ConfigError);
    RunConfig d;
    d.tolerances["nonsense"] = 1.0;
    CHECK_THROWS_AS(d.validate(), ConfigError);
    CHECK_THROWS_AS(d.tol("nonsense2"), ConfigError);
    RunConfig e;
    e.kappa = -1;
    CHECK_THROWS_AS(e.validate(), ConfigError);
}

TEST_CASE("config json round trip") {
    RunConfig c;
    c.m = 2;
    c.seed = 7;
    c.tolerances["sesqui"] = 1e-3;
    const auto back = RunConfig::from_json(nlohmann::json::parse(c.to_json().dump()));
    CHECK(back.m == 2);
    CHECK(back.seed == 7);
    CHECK(back.tol("sesqui") == 1e-3);
    CHECK_THROWS_AS(RunConfig::from_json(nlohmann::json::parse("[1,2]")), ConfigError);
    CHECK_THROWS_AS(RunConfig::from_json(nlohmann::json::parse(R"({"hbar":"x"})")), ConfigError);

    const std::string path = "heis_test_config.json";
    {
        std::ofstream os(path);
        os << R"({"hbar": 1.0, "nu": 64, "tolerances": {"group": 1e-11}})";
    }
    const auto loaded = load_config(path);
    CHECK(loaded.nu == 64);
    CHECK(loaded.tol("group") == 1e-11);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_config("/nonexistent.json"), ConfigError);
}

TEST_CASE("peeling guard trips for wide domains") {
    RunConfig c;
    c.hbar = 2.0;
    c.kappa = 0.5;
    CHECK_THROWS_AS(run_suite("peeling", c), OverflowGuard);
}

TEST_CASE("suites") {
    CHECK(suite_names().back() == "all");
    CHECK_THROWS_AS(run_suite("nope", RunConfig{}), ConfigError);
    const auto reports = run_suite("group", RunConfig{});
    REQUIRE_FALSE(reports.empty());
    for (const auto &r : reports) {
        CHECK(r.pass);
        CHECK(r.name.rfind("group.", 0) == 0);
        CHECK(r.metadata["seed"] == 42);
    }
    const auto again = run_suite("group", RunConfig{});
    for (std::size_t i = 0; i < reports.size(); ++i)
        CHECK(reports[i].value == again[i].value);
}

TEST_CASE("suites at other parameters") {
    RunConfig c;
    c.hbar = 1.5;
    c.kappa = 2.0;
    c.m = 2;
    for (const char *name : {"representations", "ladders", "peeling", "zak", "fourier"})
        for (const auto &r : run_suite(name, c)) {
            INFO(r.name << " = " << r.value);
            CHECK(r.pass);
        }
}
