#pragma once

#include "heis/representations.hpp"
#include "heis/special_functions.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace heis {

struct RunConfig {
    double hbar = 1.0;
    double kappa = 1.0;
    int m = 1;
    double L = 8.0;
    std::size_t n = 2048;
    double Lx = 6.0;
    double Ly = 6.0;
    std::size_t nx = 256;
    std::size_t ny = 256;
    std::size_t nu = 128;
    std::size_t nv = 128;
    int ntrunc = 16;
    double theta_eps = 1e-14;
    std::uint64_t seed = 42;
    std::map<std::string, double> tolerances;

    /// Throws ConfigError on any violated constraint.
    void validate() const;

    /// Tolerance by name: override if present, else the default.
    double tol(const std::string &name) const;

    /// Set one flat key from its textual value (used by the CLI flags).
    void set(const std::string &key, const std::string &value);
    static const std::vector<std::string> &keys();

    ReprParams repr() const { return {hbar, kappa}; }
    LatticeParams lattice() const { return {m, kappa}; }
    ThetaTruncation trunc() const { return {theta_eps}; }
    GridSpec1D line() const { return GridSpec1D::centered(L, n); }
    GridSpec1D plane_x() const { return GridSpec1D::centered(Lx, nx); }
    GridSpec1D plane_y() const { return GridSpec1D::centered(Ly, ny); }

    nlohmann::ordered_json to_json() const;
    static RunConfig from_json(const nlohmann::json &j);
};

const std::map<std::string, double> &default_tolerances();

/// Reads a flat JSON config; missing keys keep their defaults.
RunConfig load_config(const std::string &path);

} // namespace heis
