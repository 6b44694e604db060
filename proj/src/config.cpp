#include "heis/config.hpp"

#include "heis/errors.hpp"
#include "heis/transforms.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace heis {

const std::map<std::string, double> &default_tolerances() {
    static const std::map<std::string, double> table = {
        {"group", 1e-12},
        {"homomorphism", 1e-10},
        {"unitarity", 1e-10},
        {"conjugation", 1e-10},
        {"commute", 1e-10},
        {"ladder_vacuum", 1e-8},
        {"commutator", 1e-6},
        {"gram", 1e-6},
        {"ladder_shift", 1e-5},
        {"refinement", 0.125},
        {"derivative_order", 0.0625},
        {"zak_norm", 1e-6},
        {"zak_vacuum", 1e-8},
        {"zak_indicator", 1e-12},
        {"intertwining", 1e-5},
        {"quasi_periodicity", 1e-12},
        {"roundtrip_zak", 1e-6},
        {"lie_residual", 1e-4},
        {"cr_residual", 1e-4},
        {"constancy", 1e-4},
        {"sesqui", 1e-4},
        {"roundtrip_fsb", 1e-4},
        {"theta_value", 1e-12},
        {"theta_quasi_periodicity", 1e-8},
        {"intertwining_theta", 1e-6},
        {"peel_theta", 1e-10},
        {"dbar_residual", 1e-4},
        {"roundtrip_theta", 1e-3},
        {"fourier_duality", 1e-8},
        {"roundtrip_fourier", 1e-7},
        {"intertwining_fourier", 1e-6},
        {"hermite_ratio", 1e-6},
        {"peel_identity", 1e-12},
    };
    return table;
}

const std::vector<std::string> &RunConfig::keys() {
    static const std::vector<std::string> k = {"hbar", "kappa", "m",  "L",  "n",      "Lx",        "Ly",
                                               "nx",   "ny",    "nu", "nv", "ntrunc", "theta_eps", "seed"};
    return k;
}

namespace {

template <class T>
T parse_number(const std::string &key, const std::string &text) {
    T v{};
    const char *first = text.data();
    const char *last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw ConfigError("bad value '" + text + "' for " + key);
    return v;
}

void require(bool ok, const std::string &what) {
    if (!ok)
        throw ConfigError(what);
}

} // namespace

void RunConfig::set(const std::string &key, const std::string &value) {
    if (key == "hbar")
        hbar = parse_number<double>(key, value);
    else if (key == "kappa")
        kappa = parse_number<double>(key, value);
    else if (key == "m")
        m = parse_number<int>(key, value);
    else if (key == "L")
        L = parse_number<double>(key, value);
    else if (key == "n")
        n = parse_number<std::size_t>(key, value);
    else if (key == "Lx")
        Lx = parse_number<double>(key, value);
    else if (key == "Ly")
        Ly = parse_number<double>(key, value);
    else if (key == "nx")
        nx = parse_number<std::size_t>(key, value);
    else if (key == "ny")
        ny = parse_number<std::size_t>(key, value);
    else if (key == "nu")
        nu = parse_number<std::size_t>(key, value);
    else if (key == "nv")
        nv = parse_number<std::size_t>(key, value);
    else if (key == "ntrunc")
        ntrunc = parse_number<int>(key, value);
    else if (key == "theta_eps")
        theta_eps = parse_number<double>(key, value);
    else if (key == "seed")
        seed = parse_number<std::uint64_t>(key, value);
    else
        throw ConfigError("unknown config key '" + key + "'");
}

double RunConfig::tol(const std::string &name) const {
    if (auto it = tolerances.find(name); it != tolerances.end())
        return it->second;
    const auto &d = default_tolerances();
    if (auto it = d.find(name); it != d.end())
        return it->second;
    throw ConfigError("unknown tolerance '" + name + "'");
}

void RunConfig::validate() const {
    require(hbar > 0.0 && std::isfinite(hbar), "hbar must be positive");
    require(kappa > 0.0 && std::isfinite(kappa), "kappa must be positive");
    require(m >= 1, "m must be a positive integer");
    require(L > 0.0 && Lx > 0.0 && Ly > 0.0, "domain half-widths must be positive");
    require(n >= 16 && nx >= 16 && ny >= 16, "line and plane grids need at least 16 points per axis");
    require(nu >= 8 && nv >= 8, "torus grids need at least 8 points per axis");
    require(ntrunc >= 1, "ntrunc must be positive");
    require(theta_eps > 0.0 && theta_eps <= 1e-6, "theta_eps must lie in (0, 1e-6]");
    try {
        zak_layout(line(), nu);
    } catch (const GridIncompatible &e) {
        throw ConfigError(std::string("line grid incompatible with the torus grid: ") + e.what());
    }
    for (const auto &[name, value] : tolerances) {
        require(default_tolerances().count(name) == 1, "unknown tolerance '" + name + "'");
        require(value >= 0.0 && std::isfinite(value), "tolerance '" + name + "' must be a non-negative number");
    }
}

nlohmann::ordered_json RunConfig::to_json() const {
    nlohmann::ordered_json j = {{"hbar", hbar}, {"kappa", kappa}, {"m", m},   {"L", L},
                                {"n", n},       {"Lx", Lx},       {"Ly", Ly}, {"nx", nx},
                                {"ny", ny},     {"nu", nu},       {"nv", nv}, {"ntrunc", ntrunc},
                                {"theta_eps", theta_eps},         {"seed", seed}};
    if (!tolerances.empty())
        j["tolerances"] = tolerances;
    return j;
}

RunConfig RunConfig::from_json(const nlohmann::json &j) {
    if (!j.is_object())
        throw ConfigError("config must be a JSON object");
    RunConfig c;
    try {
        for (const auto &[key, value] : j.items()) {
            if (key == "tolerances") {
                if (!value.is_object())
                    throw ConfigError("'tolerances' must be an object");
                for (const auto &[name, tol] : value.items())
                    c.tolerances[name] = tol.get<double>();
            } else if (value.is_number()) {
                c.set(key, value.dump());
            } else {
                throw ConfigError("config key '" + key + "' must be a number");
            }
        }
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(std::string("bad config: ") + e.what());
    }
    return c;
}

RunConfig load_config(const std::string &path) {
    std::ifstream is(path);
    if (!is)
        throw ConfigError("cannot open config " + path);
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError("config " + path + " is not valid JSON: " + e.what());
    }
    return RunConfig::from_json(j);
}

} // namespace heis
