#include "microgrid/io.hpp"

#include <fstream>
#include <sstream>

#include "microgrid/errors.hpp"

namespace microgrid {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write file: " + path.string());
    return out;
}

} // namespace

void write_log_csv(const SimulationLog& log, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "hour,pv_kw,load_kw,station_request_kw,station_served_kw,electrolyzer_in_kw,"
           "tank_charge_kw,tank_discharge_kw,fuel_cell_out_kw,dump_kw,tank_energy_kwh,"
           "unserved_load_kw\n";
    for (std::size_t t = 0; t < log.hours.size(); ++t) {
        const HourRecord& h = log.hours[t];
        out << t << ',' << format_full(h.pv_kw) << ',' << format_full(h.load_kw) << ','
            << format_full(h.station_request_kw) << ',' << format_full(h.station_served_kw)
            << ',' << format_full(h.electrolyzer_in_kw) << ',' << format_full(h.tank_charge_kw)
            << ',' << format_full(h.tank_discharge_kw) << ',' << format_full(h.fuel_cell_out_kw)
            << ',' << format_full(h.dump_kw) << ',' << format_full(h.tank_energy_kwh) << ','
            << format_full(h.unserved_load_kw) << '\n';
    }
}

void write_departures_csv(const SimulationLog& log, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "day,q_sta_kwh\n";
    for (const DepartureRecord& d : log.departures)
        out << d.day << ',' << format_full(d.unserved_kwh) << '\n';
}

void write_convergence_csv(const OptimizationResult& result,
                           const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "iteration,best_penalized_cost,best_feasible_cost\n";
    for (const IterationTrace& t : result.convergence)
        out << t.iteration << ',' << format_full(t.best_penalized) << ','
            << format_full(t.best_feasible) << '\n';
}

namespace {
constexpr const char* kSizingHeader =
    "pv,electrolyzer_kw,hydrogen_tank_kg,fuel_cell_kw,dc_ac_converter_kw,evse";
}

void write_sizing_csv(const SystemSizing& s, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << kSizingHeader << '\n'
        << s.pv_count << ',' << format_full(s.electrolyzer_kw) << ',' << format_full(s.tank_kg)
        << ',' << format_full(s.fuel_cell_kw) << ',' << format_full(s.converter_kw) << ','
        << s.evse_count << '\n';
}

SystemSizing read_sizing_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open sizing file: " + path.string());
    std::string header, row;
    if (!std::getline(in, header) || header != kSizingHeader)
        throw ParseError("unexpected sizing header in " + path.string(), 1);
    if (!std::getline(in, row)) throw ParseError("missing sizing row in " + path.string(), 2);

    std::istringstream ss(row);
    std::string field;
    std::array<double, kSizingDims> v{};
    for (int i = 0; i < kSizingDims; ++i) {
        if (!std::getline(ss, field, ',')) throw ParseError("short sizing row", 2);
        v[static_cast<std::size_t>(i)] = std::stod(field);
    }
    return sizing_from_position(v);
}

} // namespace microgrid
