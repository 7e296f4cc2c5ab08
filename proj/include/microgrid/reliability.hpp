#pragma once

#include "microgrid/agents.hpp"

namespace microgrid {

inline constexpr double kElfLoadLimit = 0.01;
inline constexpr double kElfStationLimit = 0.1;

/// Constraint evaluation of one simulated year. The thresholds are inclusive
/// (being exactly on the limit counts as feasible).
struct ConstraintReport {
    double elf_load = 0.0;
    double elf_station = 0.0;
    double tank_end_minus_initial_kwh = 0.0;
    bool feasible = false;
    double elf_load_violation = 0.0;
    double elf_station_violation = 0.0;
    double tank_violation_kwh = 0.0;
};

/// Equivalent loss factor of the office load: the time-average of
/// unserved/requested, with no-demand hours contributing zero.
double elf_load(const SimulationLog& log);

/// Equivalent loss factor of the charging station over workday departures:
/// the mean of Q_sta / day-total-request, divided by the workday count.
/// Throws LengthError when the departure records do not match `workdays`.
double elf_station(const SimulationLog& log, int workdays);

/// Evaluates all three sizing constraints. `workdays` defaults to the
/// number of departure records in the log.
ConstraintReport check_feasibility(const SimulationLog& log, int workdays = -1);

} // namespace microgrid
