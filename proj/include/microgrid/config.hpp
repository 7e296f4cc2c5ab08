#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "microgrid/agents.hpp"
#include "microgrid/economics.hpp"
#include "microgrid/optimizer.hpp"

namespace microgrid {

/// One run of record: profile sources, fleet behaviour, catalog, swarm
/// settings, outputs. Loaded from a sectioned key=value file; every field has
/// a default that reproduces the study setup.
struct RunConfig {
    std::uint64_t seed = 1;

    // [profiles] — each profile comes from exactly one source: the literal
    // "synth" or a CSV path.
    std::string irradiance_source = "synth";
    double irradiance_peak_w_m2 = 950.0;
    std::string office_source = "synth";
    double office_peak_kw = 60.0;
    // Station demand: "fleet" derives the unmanaged profile from the
    // synthesized arrival schedule; a path loads it directly.
    std::string station_source = "fleet";

    PhevFleetConfig fleet{.arrival_start_hour = 6.9};

    Scenario scenario = Scenario::DeferrableCharging;
    double initial_tank_fraction = 0.5;
    double hhv_kwh_per_kg = 39.7;
    double tank_floor_fraction = 0.05;
    int reference_evse = 7;

    /// Baseline sizing for plain simulation runs (the scenario-1 optimum
    /// reported in the source study).
    SystemSizing sizing{384, 49.73, 52.63, 48.31, 53.59, 34};

    ComponentCatalog catalog = ComponentCatalog::defaults();
    PsoConfig pso{};

    std::filesystem::path output_dir = "out";
};

/// Parses the sectioned key=value format. Unknown keys and malformed values
/// throw ConfigError naming the field.
RunConfig load_run_config(const std::filesystem::path& path);

/// Applies the seed everywhere it matters (profile synthesis and swarm).
void apply_master_seed(RunConfig& config, std::uint64_t seed);

/// Simulation knobs implied by the config (efficiencies come from the
/// catalog so there is a single source of truth).
SimulationConfig simulation_config(const RunConfig& config);

/// The profile set one run works with. The schedule is kept alongside the
/// derived station profile so reports can state per-day requested energy.
struct PreparedInputs {
    HourlyTimeSeries irradiance;
    HourlyTimeSeries office_load;
    HourlyTimeSeries station_profile;
    DailyArrivalSchedule schedule;
};

/// Loads or synthesizes every profile named by the config.
PreparedInputs prepare_inputs(const RunConfig& config);

/// Writes the documented default configuration file.
void write_default_config(const std::filesystem::path& path);

} // namespace microgrid
