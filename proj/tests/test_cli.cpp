#include "heis/csv.hpp"
#include "heis/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

using namespace heis;

namespace {

int run(const std::string &args) {
    const std::string cmd = std::string(HEIS_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void write(const std::string &path, const std::string &text) {
    std::ofstream os(path);
    os << text;
}

} // namespace

TEST_CASE("gen writes the named signals") {
    REQUIRE(run("gen gaussian cli_gauss.csv") == 0);
    const auto g = std::get<SampledLine>(csv::read_file("cli_gauss.csv"));
    CHECK(g.size() == 2048);
    CHECK(std::abs(g[1024] - std::pow(2.0, 0.25)) < 1e-15);
    REQUIRE(run("gen hermite:0 cli_h0.csv") == 0);
    CHECK(std::get<SampledLine>(csv::read_file("cli_h0.csv")).values == g.values);
    REQUIRE(run("gen theta-vacuum cli_theta.csv --m 2 --nu 32 --nv 32") == 0);
    const auto t = std::get<TorusField>(csv::read_file("cli_theta.csv"));
    CHECK(t.m == 2);
    CHECK(t.nu == 32);
    CHECK(run("gen hermite:x cli_bad.csv") == 3);
    CHECK(run("gen wobble cli_bad.csv") == 3);
}

TEST_CASE("zak then izak reproduces the input") {
    REQUIRE(run("gen gaussian cli_gauss.csv") == 0);
    REQUIRE(run("zak --m 1 cli_gauss.csv cli_zak.csv") == 0);
    std::ifstream is("cli_zak.csv");
    std::string first;
    std::getline(is, first);
    CHECK(first == "# m=1");
    REQUIRE(run("izak cli_zak.csv cli_back.csv") == 0);
    const auto a = std::get<SampledLine>(csv::read_file("cli_gauss.csv"));
    const auto b = std::get<SampledLine>(csv::read_file("cli_back.csv"));
    double d = 0.0, n = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        d += std::norm(a[k] - b[k]);
        n += std::norm(a[k]);
    }
    CHECK(std::sqrt(d / n) < 1e-6);
}

TEST_CASE("other transforms run") {
    REQUIRE(run("gen gaussian cli_gauss.csv") == 0);
    CHECK(run("fourier cli_gauss.csv cli_f.csv") == 0);
    CHECK(run("ifourier cli_f.csv cli_fi.csv") == 0);
    CHECK(run("peel-schrodinger cli_gauss.csv cli_p.csv") == 0);
    CHECK(run("peel-schrodinger --inverse cli_p.csv cli_pi.csv") == 0);
    CHECK(run("prefsb --nx 32 --ny 32 cli_gauss.csv cli_w.csv") == 0);
    CHECK(run("peel-fsb cli_w.csv cli_wp.csv") == 0);
    CHECK(run("fsb --nx 32 --ny 32 cli_gauss.csv cli_fsb.csv") == 0);
    REQUIRE(run("gen theta-vacuum --nu 16 --nv 16 cli_theta.csv") == 0);
    CHECK(run("peel-lattice cli_theta.csv cli_tp.csv") == 0);
    CHECK(run("pretheta --nx 32 --ny 32 cli_theta.csv cli_pt.csv") == 0);
    CHECK(run("ipretheta --nu 16 --nv 16 cli_pt.csv cli_ipt.csv") == 0);
}

TEST_CASE("exit codes") {
    write("cli_missing.csv", "t,re,im\n0,1\n0.5,1,0\n");
    CHECK(run("zak cli_missing.csv cli_out.csv") == 2);
    write("cli_text.csv", "t,re,im\n0,a,0\n0.5,1,0\n");
    CHECK(run("fourier cli_text.csv cli_out.csv") == 2);
    CHECK(run("zak /nonexistent.csv cli_out.csv") == 2);
    REQUIRE(run("gen theta-vacuum --nu 16 --nv 16 cli_theta.csv") == 0);
    CHECK(run("zak cli_theta.csv cli_out.csv") == 2);
    CHECK(run("verify nosuchsuite") == 3);
    CHECK(run("verify group --hbar -1") == 3);
    CHECK(run("verify group --n 1000") == 3);
    CHECK(run("verify group --tol bogus=1") == 3);
    CHECK(run("verify group --tol group") == 3);
    CHECK(run("frobnicate") == 3);
    CHECK(run("") == 3);
    write("cli_bad_config.json", "{not json");
    CHECK(run("verify group --config cli_bad_config.json") == 3);
    CHECK(run("verify group") == 0);
    CHECK(run("verify group --tol group=1e-30") == 1);
    write("cli_wide.csv", "t,re,im\n-100,1,0\n100,1,0\n");
    CHECK(run("peel-schrodinger cli_wide.csv cli_out.csv") == 4);
}

TEST_CASE("config file and environment") {
    write("cli_cfg.json", R"({"nu": 64, "nv": 16})");
    REQUIRE(run("gen theta-vacuum --config cli_cfg.json cli_t.csv") == 0);
    CHECK(std::get<TorusField>(csv::read_file("cli_t.csv")).nu == 64);
    REQUIRE(run("gen theta-vacuum --config cli_cfg.json --nu 32 cli_t.csv") == 0);
    CHECK(std::get<TorusField>(csv::read_file("cli_t.csv")).nu == 32);
    REQUIRE(run("gen theta-vacuum cli_t.csv") == 0);
    CHECK(std::get<TorusField>(csv::read_file("cli_t.csv")).nu == 128);
    setenv("HEIS_CONFIG", "cli_cfg.json", 1);
    REQUIRE(run("gen theta-vacuum cli_t.csv") == 0);
    unsetenv("HEIS_CONFIG");
    CHECK(std::get<TorusField>(csv::read_file("cli_t.csv")).nu == 64);
}

TEST_CASE("verify writes a JSON report") {
    REQUIRE(run("verify group --report cli_report.json") == 0);
    std::ifstream is("cli_report.json");
    std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    CHECK(text.find("\"group.associativity\"") != std::string::npos);
    CHECK(text.find("\"seed\": 42") != std::string::npos);
}
