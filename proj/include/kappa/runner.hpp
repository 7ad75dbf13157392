#pragma once

#include "kappa/report.hpp"
#include "kappa/runconfig.hpp"

namespace kappa {

// Executes the configured layers and assembles the report. Deterministic
// given the config and seed; timings live in the report header only.
CheckReport run(const RunConfig& config);

}  // namespace kappa
