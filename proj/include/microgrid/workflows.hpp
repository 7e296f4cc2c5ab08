#pragma once

#include "microgrid/config.hpp"

namespace microgrid {

/// Simulates one year with the configured sizing, writes the hourly log,
/// departures, and a summary. Returns a process exit code.
int cmd_simulate(const RunConfig& config);

/// Searches for the minimum-cost sizing under the configured scenario and
/// writes the sizing table plus the convergence trace.
int cmd_optimize(const RunConfig& config);

/// Optimizes both scenarios over identical profiles and seed, writing a
/// side-by-side table and the cost delta.
int cmd_compare(const RunConfig& config);

/// Optimization pieces shared with the compare workflow and the test suites.
struct OptimizeOutcome {
    OptimizationResult result;
    PreparedInputs inputs;
};
OptimizeOutcome run_optimization(const RunConfig& config, Scenario scenario);

} // namespace microgrid
