#include "heis/csv.hpp"
#include "heis/errors.hpp"
#include "heis/suites.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>

namespace {

using namespace heis;

enum Exit { kOk = 0, kFail = 1, kInput = 2, kConfig = 3, kNumerical = 4 };

struct Common {
    std::string config_path;
    std::map<std::string, std::string> overrides;
};

void add_config_flags(CLI::App *sub, Common &common) {
    sub->add_option("--config", common.config_path, "JSON config file (default: $HEIS_CONFIG)");
    for (const auto &key : RunConfig::keys())
        sub->add_option_function<std::string>(
            "--" + key, [&common, key](const std::string &v) { common.overrides[key] = v; }, "override " + key);
}

RunConfig build_config(const Common &common) {
    RunConfig cfg;
    std::string path = common.config_path;
    if (path.empty())
        if (const char *env = std::getenv("HEIS_CONFIG"))
            path = env;
    if (!path.empty())
        cfg = load_config(path);
    for (const auto &[k, v] : common.overrides)
        cfg.set(k, v);
    cfg.validate();
    return cfg;
}

template <class T>
const T &expect(const csv::AnyField &f, const char *schema) {
    if (const auto *v = std::get_if<T>(&f))
        return *v;
    throw ShapeMismatch(std::string("input must be a ") + schema + " CSV");
}

csv::AnyField transform(const std::string &name, const csv::AnyField &in, const RunConfig &c, bool inverse) {
    const ReprParams p = c.repr();
    const LatticeParams lp = c.lattice();
    const PeelDirection dir = inverse ? PeelDirection::Inverse : PeelDirection::Forward;
    if (name == "prefsb")
        return covariant_pre_fsb(p, FiducialSpec::gaussian(), expect<SampledLine>(in, "line"), c.plane_x(), c.plane_y());
    if (name == "fsb")
        return fsb_transform(p, expect<SampledLine>(in, "line"), c.plane_x(), c.plane_y());
    if (name == "zak")
        return covariant_zak(lp, expect<SampledLine>(in, "line"), c.nu, c.nv, c.ntrunc);
    if (name == "izak") {
        const auto &T = expect<TorusField>(in, "torus");
        return contravariant_zak_inverse({T.m, c.kappa}, T, c.line());
    }
    if (name == "pretheta") {
        const auto &T = expect<TorusField>(in, "torus");
        return covariant_pre_theta({T.m, c.kappa}, T, c.plane_x(), c.plane_y(), c.ntrunc);
    }
    if (name == "ipretheta")
        return contravariant_pre_theta_inverse(lp, ReconstructionSpec::theta_vacuum(), expect<PlaneField>(in, "plane"),
                                               c.nu, c.nv, c.ntrunc);
    if (name == "fourier")
        return covariant_fourier_inverse(p, expect<SampledLine>(in, "line"), c.line());
    if (name == "ifourier")
        return contravariant_fourier(p, expect<SampledLine>(in, "line"), c.line());
    if (name == "peel-fsb")
        return peel_fsb(p, expect<PlaneField>(in, "plane"), dir);
    if (name == "peel-schrodinger")
        return peel_schrodinger(p, expect<SampledLine>(in, "line"), dir);
    const auto &T = expect<TorusField>(in, "torus");
    return peel_lattice({T.m, c.kappa}, T, dir);
}

csv::AnyField generate(const std::string &signal, const RunConfig &c) {
    const ReprParams p = c.repr();
    if (signal == "gaussian")
        return vacuum_gaussian(p, c.line());
    if (signal == "indicator")
        return sample([](double t) { return cplx{t >= 0.0 && t < 1.0 ? 1.0 : 0.0}; }, c.line());
    if (signal == "theta-vacuum")
        return vacuum_theta(c.lattice(), c.nu, c.nv, c.trunc());
    if (signal.rfind("hermite:", 0) == 0) {
        int n = 0;
        const std::string digits = signal.substr(8);
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
            throw ConfigError("bad Hermite order in '" + signal + "'");
        return hermite_state(p, n, c.line());
    }
    throw ConfigError("unknown signal '" + signal + "'");
}

int verify(const std::string &suite, const RunConfig &c, const std::string &report) {
    const auto reports = run_suite(suite, c);
    bool ok = true;
    for (const auto &r : reports) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(58) << r.name << std::scientific
                  << std::setprecision(3) << r.value << " <= " << r.tolerance << '\n';
        ok = ok && r.pass;
    }
    if (!report.empty()) {
        std::ofstream os(report);
        if (!os)
            throw ConfigError("cannot write report " + report);
        os << to_json(reports).dump(2) << '\n';
    }
    std::cout << (ok ? "all checks passed" : "some checks failed") << " (" << reports.size() << ")\n";
    return ok ? kOk : kFail;
}

int run(int argc, char **argv) {
    CLI::App app{"Heisenberg group transforms and their verification"};
    app.require_subcommand(1);
    Common common;
    std::function<int()> action;

    const std::vector<std::string> transforms = {"prefsb",    "fsb",      "zak",      "izak",
                                                 "pretheta",  "ipretheta", "fourier",  "ifourier",
                                                 "peel-fsb",  "peel-schrodinger", "peel-lattice"};
    std::string input, output;
    bool inverse = false;
    for (const auto &name : transforms) {
        auto *sub = app.add_subcommand(name, "apply the " + name + " transform to a CSV field");
        sub->add_option("input", input, "input CSV")->required();
        sub->add_option("output", output, "output CSV")->required();
        if (name.rfind("peel-", 0) == 0)
            sub->add_flag("--inverse", inverse, "remove the peeling instead of applying it");
        add_config_flags(sub, common);
        sub->callback([&, name] {
            action = [&, name] {
                const RunConfig cfg = build_config(common);
                csv::write_file(output, transform(name, csv::read_file(input), cfg, inverse));
                return static_cast<int>(kOk);
            };
        });
    }

    std::string suite, report;
    std::vector<std::string> tols;
    auto *ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite, "group|representations|ladders|zak|fsb|theta|fourier|peeling|contravariant|controls|all")
        ->required();
    ver->add_option("--report", report, "write the JSON report here");
    ver->add_option("--tol", tols, "tolerance override name=value")->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    add_config_flags(ver, common);
    ver->callback([&] {
        action = [&] {
            RunConfig cfg = build_config(common);
            for (const auto &t : tols) {
                const auto eq = t.find('=');
                if (eq == std::string::npos)
                    throw ConfigError("--tol expects name=value, got '" + t + "'");
                double v = 0.0;
                const std::string num = t.substr(eq + 1);
                const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
                if (ec != std::errc{} || ptr != num.data() + num.size())
                    throw ConfigError("bad tolerance value '" + num + "'");
                cfg.tolerances[t.substr(0, eq)] = v;
            }
            cfg.validate();
            return verify(suite, cfg, report);
        };
    });

    std::string signal;
    auto *gen = app.add_subcommand("gen", "write a test signal");
    gen->add_option("signal", signal, "gaussian|hermite:<n>|indicator|theta-vacuum")->required();
    gen->add_option("output", output, "output CSV")->required();
    add_config_flags(gen, common);
    gen->callback([&] {
        action = [&] {
            const RunConfig cfg = build_config(common);
            csv::write_file(output, generate(signal, cfg));
            return static_cast<int>(kOk);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kConfig;
    }

    try {
        return action();
    } catch (const InputError &e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInput;
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const NumericalGuard &e) {
        std::cerr << "numerical guard: " << e.what() << '\n';
        return kNumerical;
    }
}

} // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
}
