#pragma once

#include <filesystem>

#include "microgrid/agents.hpp"
#include "microgrid/optimizer.hpp"

namespace microgrid {

/// Hourly log: one row per hour, header included, columns in type order.
void write_log_csv(const SimulationLog& log, const std::filesystem::path& path);

/// Departure events: day index and uncharged energy.
void write_departures_csv(const SimulationLog& log, const std::filesystem::path& path);

/// Convergence trace: iteration, best penalized cost, best feasible cost.
void write_convergence_csv(const OptimizationResult& result, const std::filesystem::path& path);

/// Optimal sizes in the report layout (one labelled column per component),
/// at full round-trip precision.
void write_sizing_csv(const SystemSizing& sizing, const std::filesystem::path& path);

/// Reads back a sizing table written by write_sizing_csv.
SystemSizing read_sizing_csv(const std::filesystem::path& path);

} // namespace microgrid
