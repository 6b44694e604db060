#pragma once

#include "heis/config.hpp"
#include "heis/verify.hpp"

#include <string>
#include <vector>

namespace heis {

/// Names accepted by run_suite, "all" last.
const std::vector<std::string> &suite_names();

/// Runs one verification battery. Report names are prefixed with the suite
/// name; metadata carries the seed and the suite wall time. Throws ConfigError
/// for an unknown suite or an invalid config.
std::vector<DefectReport> run_suite(const std::string &name, const RunConfig &cfg);

/// Physicists' Hermite polynomial H_n(x), H_{n+1} = 2x H_n - 2n H_{n-1}.
double hermite_polynomial(int n, double x);

} // namespace heis
