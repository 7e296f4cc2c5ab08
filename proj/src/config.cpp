#include "microgrid/config.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "microgrid/errors.hpp"
#include "microgrid/rng.hpp"

namespace microgrid {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

/// Sectioned key=value file with '#'/';' comments.
class KeyValueFile {
public:
    explicit KeyValueFile(const std::filesystem::path& path) {
        std::ifstream in(path);
        if (!in) throw ConfigError("config", "cannot open " + path.string());
        std::string line, section;
        long row = 0;
        while (std::getline(in, line)) {
            ++row;
            const auto comment = line.find_first_of("#;");
            if (comment != std::string::npos) line.erase(comment);
            line = trim(line);
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']') throw ParseError("unterminated section header", row);
                section = trim(line.substr(1, line.size() - 2));
                continue;
            }
            const auto eq = line.find('=');
            if (eq == std::string::npos) throw ParseError("expected key = value", row);
            const std::string key = section + '.' + trim(line.substr(0, eq));
            values_[key] = trim(line.substr(eq + 1));
        }
    }

    bool has(const std::string& key) const { return values_.count(key) > 0; }

    std::string text(const std::string& key, const std::string& fallback) {
        consumed_.insert(key);
        auto it = values_.find(key);
        return it == values_.end() ? fallback : it->second;
    }

    double number(const std::string& key, double fallback) {
        consumed_.insert(key);
        auto it = values_.find(key);
        if (it == values_.end()) return fallback;
        try {
            std::size_t used = 0;
            const double v = std::stod(it->second, &used);
            if (used != it->second.size()) throw std::invalid_argument("trailing text");
            return v;
        } catch (const std::exception&) {
            throw ConfigError(key, "not a number: '" + it->second + "'");
        }
    }

    long integer(const std::string& key, long fallback) {
        const double v = number(key, static_cast<double>(fallback));
        const long n = static_cast<long>(v);
        if (static_cast<double>(n) != v) throw ConfigError(key, "expected an integer");
        return n;
    }

    void reject_unknown_keys() const {
        for (const auto& [key, value] : values_) {
            if (!consumed_.count(key)) throw ConfigError(key, "unknown setting");
        }
    }

private:
    std::map<std::string, std::string> values_;
    std::set<std::string> consumed_;
};

void read_component(KeyValueFile& f, const std::string& prefix, ComponentSpec& spec) {
    spec.capital_usd = f.number("catalog." + prefix + "_capital", spec.capital_usd);
    spec.replacement_usd = f.number("catalog." + prefix + "_replacement", spec.replacement_usd);
    spec.maintenance_usd_per_yr =
        f.number("catalog." + prefix + "_maintenance", spec.maintenance_usd_per_yr);
    spec.lifetime_yr = f.number("catalog." + prefix + "_lifetime", spec.lifetime_yr);
    spec.efficiency = f.number("catalog." + prefix + "_efficiency", spec.efficiency);
    if (spec.lifetime_yr <= 0.0) throw ConfigError("catalog." + prefix + "_lifetime", "must be > 0");
    if (spec.capital_usd < 0.0 || spec.replacement_usd < 0.0 || spec.maintenance_usd_per_yr < 0.0)
        throw ConfigError("catalog." + prefix + "_capital", "costs must be >= 0");
    if (spec.efficiency <= 0.0 || spec.efficiency > 1.0)
        throw ConfigError("catalog." + prefix + "_efficiency", "must lie in (0, 1]");
}

Bounds read_bounds(KeyValueFile& f, const std::string& name, const Bounds& fallback) {
    Bounds b;
    b.lo = f.number("pso." + name + "_min", fallback.lo);
    b.hi = f.number("pso." + name + "_max", fallback.hi);
    if (b.lo < 0.0 || b.lo > b.hi) throw ConfigError("pso." + name + "_min", "need 0 <= lo <= hi");
    return b;
}

} // namespace

RunConfig load_run_config(const std::filesystem::path& path) {
    KeyValueFile f(path);
    RunConfig c;

    c.irradiance_source = f.text("profiles.irradiance", c.irradiance_source);
    c.irradiance_peak_w_m2 = f.number("profiles.irradiance_peak_w_m2", c.irradiance_peak_w_m2);
    c.office_source = f.text("profiles.office_load", c.office_source);
    c.office_peak_kw = f.number("profiles.office_peak_kw", c.office_peak_kw);
    c.station_source = f.text("profiles.station", c.station_source);

    c.fleet.fleet_size = static_cast<int>(f.integer("fleet.fleet_size", c.fleet.fleet_size));
    c.fleet.arrival_start_hour = f.number("fleet.arrival_start_hour", c.fleet.arrival_start_hour);
    c.fleet.arrival_end_hour = f.number("fleet.arrival_end_hour", c.fleet.arrival_end_hour);
    c.fleet.departure_hour =
        static_cast<int>(f.integer("fleet.departure_hour", c.fleet.departure_hour));
    c.fleet.charge_rate_kw = f.number("fleet.charge_rate_kw", c.fleet.charge_rate_kw);
    c.fleet.demand_upper_kwh = f.number("fleet.demand_upper_kwh", c.fleet.demand_upper_kwh);
    c.fleet.workdays_per_year =
        static_cast<int>(f.integer("fleet.workdays_per_year", c.fleet.workdays_per_year));
    try {
        validate(c.fleet);
    } catch (const DomainError& e) {
        throw ConfigError("fleet", e.what());
    }

    c.scenario = scenario_from_name(f.text("simulation.scenario", scenario_name(c.scenario)));
    c.initial_tank_fraction =
        f.number("simulation.initial_tank_fraction", c.initial_tank_fraction);
    c.hhv_kwh_per_kg = f.number("simulation.hhv_kwh_per_kg", c.hhv_kwh_per_kg);
    c.tank_floor_fraction = f.number("simulation.tank_floor_fraction", c.tank_floor_fraction);
    c.reference_evse = static_cast<int>(f.integer("simulation.reference_evse", c.reference_evse));
    if (c.initial_tank_fraction < 0.0 || c.initial_tank_fraction > 1.0)
        throw ConfigError("simulation.initial_tank_fraction", "must lie in [0, 1]");
    if (c.reference_evse < 1) throw ConfigError("simulation.reference_evse", "must be >= 1");

    c.sizing.pv_count = static_cast<int>(f.integer("sizing.pv", c.sizing.pv_count));
    c.sizing.electrolyzer_kw = f.number("sizing.electrolyzer_kw", c.sizing.electrolyzer_kw);
    c.sizing.tank_kg = f.number("sizing.tank_kg", c.sizing.tank_kg);
    c.sizing.fuel_cell_kw = f.number("sizing.fuel_cell_kw", c.sizing.fuel_cell_kw);
    c.sizing.converter_kw = f.number("sizing.converter_kw", c.sizing.converter_kw);
    c.sizing.evse_count = static_cast<int>(f.integer("sizing.evse", c.sizing.evse_count));

    c.catalog.interest_rate = f.number("catalog.interest_rate", c.catalog.interest_rate);
    c.catalog.project_years = f.number("catalog.project_years", c.catalog.project_years);
    if (c.catalog.project_years <= 0.0) throw ConfigError("catalog.project_years", "must be > 0");
    read_component(f, "pv", c.catalog.pv);
    read_component(f, "electrolyzer", c.catalog.electrolyzer);
    read_component(f, "tank", c.catalog.tank);
    read_component(f, "fuel_cell", c.catalog.fuel_cell);
    read_component(f, "converter", c.catalog.converter);
    read_component(f, "evse", c.catalog.evse);

    c.pso.swarm_size = static_cast<int>(f.integer("pso.swarm_size", c.pso.swarm_size));
    c.pso.max_iterations =
        static_cast<int>(f.integer("pso.max_iterations", c.pso.max_iterations));
    c.pso.inertia = f.number("pso.inertia", c.pso.inertia);
    c.pso.cognitive = f.number("pso.cognitive", c.pso.cognitive);
    c.pso.social = f.number("pso.social", c.pso.social);
    c.pso.velocity_clamp = f.number("pso.velocity_clamp", c.pso.velocity_clamp);
    c.pso.penalty_weight = f.number("pso.penalty_weight", c.pso.penalty_weight);
    if (c.pso.swarm_size < 2) throw ConfigError("pso.swarm_size", "must be >= 2");
    if (c.pso.max_iterations < 1) throw ConfigError("pso.max_iterations", "must be >= 1");
    c.pso.bounds[0] = read_bounds(f, "pv", c.pso.bounds[0]);
    c.pso.bounds[1] = read_bounds(f, "electrolyzer_kw", c.pso.bounds[1]);
    c.pso.bounds[2] = read_bounds(f, "tank_kg", c.pso.bounds[2]);
    c.pso.bounds[3] = read_bounds(f, "fuel_cell_kw", c.pso.bounds[3]);
    c.pso.bounds[4] = read_bounds(f, "converter_kw", c.pso.bounds[4]);
    c.pso.bounds[5] = read_bounds(f, "evse", c.pso.bounds[5]);

    c.output_dir = f.text("output.dir", c.output_dir.string());

    apply_master_seed(c, static_cast<std::uint64_t>(f.integer("profiles.seed", 1)));
    f.reject_unknown_keys();
    return c;
}

void apply_master_seed(RunConfig& config, std::uint64_t seed) {
    config.seed = seed;
    config.fleet.rng_seed = derive_seed(seed, 3);
    config.pso.rng_seed = derive_seed(seed, 4);
}

SimulationConfig simulation_config(const RunConfig& c) {
    SimulationConfig s;
    s.pv.generator_efficiency = c.catalog.pv.efficiency;
    s.fleet = c.fleet;
    s.electrolyzer_efficiency = c.catalog.electrolyzer.efficiency;
    s.fuel_cell_efficiency = c.catalog.fuel_cell.efficiency;
    s.converter_efficiency = c.catalog.converter.efficiency;
    s.station_efficiency = c.catalog.evse.efficiency;
    s.storage_efficiency = c.catalog.tank.efficiency;
    s.hhv_kwh_per_kg = c.hhv_kwh_per_kg;
    s.tank_floor_fraction = c.tank_floor_fraction;
    s.initial_tank_fraction = c.initial_tank_fraction;
    s.reference_evse_count = c.reference_evse;
    return s;
}

namespace {

HourlyTimeSeries load_or_fail(const std::string& source, Quantity quantity,
                              const std::string& field) {
    if (!std::filesystem::exists(source))
        throw ConfigError(field, "file not found: " + source);
    return load_series_csv(source, quantity);
}

} // namespace

PreparedInputs prepare_inputs(const RunConfig& c) {
    PreparedInputs in;
    in.irradiance = c.irradiance_source == "synth"
                        ? synthesize_irradiance(derive_seed(c.seed, 2), c.irradiance_peak_w_m2)
                        : load_or_fail(c.irradiance_source, Quantity::IrradianceWPerM2,
                                       "profiles.irradiance");
    in.office_load = c.office_source == "synth"
                         ? synthesize_office_load(c.office_peak_kw, derive_seed(c.seed, 1))
                         : load_or_fail(c.office_source, Quantity::LoadKw,
                                        "profiles.office_load");
    in.schedule = synthesize_phev_fleet(c.fleet, in.irradiance.days());
    in.station_profile =
        c.station_source == "fleet"
            ? unmanaged_charging_profile(in.schedule, c.fleet, c.reference_evse)
            : load_or_fail(c.station_source, Quantity::ChargingKw, "profiles.station");
    return in;
}

void write_default_config(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write config: " + path.string());
    out << R"(# Microgrid sizing run configuration.
# Every setting below shows its default; delete or edit freely.

[profiles]
seed = 1
irradiance = synth            # "synth" or a CSV path (8760 rows, W/m2)
irradiance_peak_w_m2 = 950
office_load = synth           # "synth" or a CSV path (8760 rows, kW)
office_peak_kw = 60
station = fleet               # "fleet" (derive from arrivals) or a CSV path (kW)

[fleet]
fleet_size = 50
arrival_start_hour = 6.9
arrival_end_hour = 10         # T1
departure_hour = 17           # T2
charge_rate_kw = 4
demand_upper_kwh = 10.4
workdays_per_year = 261

[simulation]
scenario = deferrable         # fixed | deferrable
initial_tank_fraction = 0.5
hhv_kwh_per_kg = 39.7
tank_floor_fraction = 0.05
reference_evse = 7            # plugs assumed for the unmanaged profile

[sizing]                      # used by the `simulate` command
pv = 384
electrolyzer_kw = 49.73
tank_kg = 52.63
fuel_cell_kw = 48.31
converter_kw = 53.59
evse = 34

[catalog]
interest_rate = 0.06
project_years = 20
# Overrides per component: <name>_capital, <name>_replacement,
# <name>_maintenance, <name>_lifetime, <name>_efficiency where <name> is one
# of pv, electrolyzer, tank, fuel_cell, converter, evse.

[pso]
swarm_size = 50
max_iterations = 100
inertia = 0.7
cognitive = 1.5
social = 1.5
velocity_clamp = 0.2
penalty_weight = 1e7
pv_min = 0
pv_max = 1000
electrolyzer_kw_min = 0
electrolyzer_kw_max = 200
tank_kg_min = 0
tank_kg_max = 200
fuel_cell_kw_min = 0
fuel_cell_kw_max = 200
converter_kw_min = 0
converter_kw_max = 200
evse_min = 0
evse_max = 100

[output]
dir = out
)";
}

} // namespace microgrid
