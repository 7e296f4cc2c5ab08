#include "microgrid/reliability.hpp"

#include <algorithm>

#include "microgrid/errors.hpp"

namespace microgrid {

double elf_load(const SimulationLog& log) {
    if (log.hours.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& h : log.hours) {
        if (h.load_kw > 0.0) sum += h.unserved_load_kw / h.load_kw;
    }
    return sum / static_cast<double>(log.hours.size());
}

double elf_station(const SimulationLog& log, int workdays) {
    if (static_cast<int>(log.departures.size()) != workdays)
        throw LengthError("expected " + std::to_string(workdays) +
                          " departure records, log has " +
                          std::to_string(log.departures.size()));
    if (workdays == 0) return 0.0;
    double sum = 0.0;
    for (const auto& d : log.departures) {
        if (d.requested_kwh > 0.0) sum += d.unserved_kwh / d.requested_kwh;
    }
    return sum / static_cast<double>(workdays);
}

ConstraintReport check_feasibility(const SimulationLog& log, int workdays) {
    if (workdays < 0) workdays = static_cast<int>(log.departures.size());

    ConstraintReport report;
    report.elf_load = elf_load(log);
    report.elf_station = elf_station(log, workdays);
    report.tank_end_minus_initial_kwh = log.final_tank_kwh - log.initial_tank_kwh;
    report.elf_load_violation = std::max(0.0, report.elf_load - kElfLoadLimit);
    report.elf_station_violation = std::max(0.0, report.elf_station - kElfStationLimit);
    report.tank_violation_kwh = std::max(0.0, -report.tank_end_minus_initial_kwh);
    report.feasible = report.elf_load_violation == 0.0 &&
                      report.elf_station_violation == 0.0 && report.tank_violation_kwh == 0.0;
    return report;
}

} // namespace microgrid
