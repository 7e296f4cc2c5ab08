#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "microgrid/components.hpp"
#include "microgrid/profiles.hpp"
#include "microgrid/series.hpp"
#include "microgrid/sizing.hpp"

namespace microgrid {

enum class Scenario { FixedCharging, DeferrableCharging };

Scenario scenario_from_name(const std::string& name);
std::string scenario_name(Scenario s);

// ---------------------------------------------------------------------------
// Control-agent dispatch rule
// ---------------------------------------------------------------------------

/// Outcome of the hourly power-balance decision. Power requested from or
/// granted to other agents is expressed at the DC bus; converter and station
/// losses are already folded in. At most one of store/shortage is nonzero.
struct DispatchDecision {
    double power_balance_kw = 0.0;              // PV minus both adjusted demands
    std::optional<double> pv_vs_load_kw;        // second balance, evaluated only when negative
    double store_request_kw = 0.0;              // surplus handed to the generation agent
    double shortage_request_kw = 0.0;           // deficit requested from the generation agent
    double station_allocation_kw = 0.0;         // DC-bus power granted to the station
};

/// station_request_kw is the station-side (vehicle) demand; the rule divides
/// by the EVSE efficiency to get the bus draw.
DispatchDecision dispatch_step(double pv_kw, double load_kw, double station_request_kw,
                               const DeviceRatings& ratings);

// ---------------------------------------------------------------------------
// Generation-agent actions
// ---------------------------------------------------------------------------

struct StoreFlows {
    double electrolyzer_in_kw = 0.0; // PV power actually absorbed by the electrolyzer
    double tank_charge_kw = 0.0;     // hydrogen-side power actually stored
    double dump_kw = 0.0;            // PV-side power burned in the dump resistor
};
struct StoreResult {
    TankState tank;
    StoreFlows flows;
};

/// Stores a PV surplus: electrolyzer up to its rating, tank up to capacity,
/// the rest (rating clip plus capacity bounce-back, expressed at the PV side)
/// into the dump resistor. electrolyzer_in + dump always equals the surplus.
StoreResult ga_store_surplus(const TankState& tank, const DeviceRatings& ratings,
                             double surplus_kw);

struct SupplyFlows {
    double tank_discharge_kw = 0.0; // hydrogen drawn from the tank
    double fuel_cell_out_kw = 0.0;  // electric power delivered to the converter
};
struct SupplyResult {
    TankState tank;
    SupplyFlows flows;
    double unmet_kw = 0.0; // part of the bus-side shortage the fuel cell could not cover
};

/// Covers a DC-bus shortage from stored hydrogen, limited by the fuel-cell
/// output rating and by the energy available above the tank floor.
SupplyResult ga_supply_shortage(const TankState& tank, const DeviceRatings& ratings,
                                double shortage_kw);

// ---------------------------------------------------------------------------
// Station-agent day ledger
// ---------------------------------------------------------------------------

/// One day of station bookkeeping. Requests are tracked at the DC bus
/// (vehicle demand divided by the EVSE efficiency) so that served + shed +
/// departure residual always add up to the day's original request.
struct StationDayState {
    int day = 0;
    bool workday = false;
    std::array<double, kHoursPerDay> request_kw{}; // remaining bus draw per hour of day
    double original_request_kwh = 0.0;
    double served_kwh = 0.0;
    double shed_kwh = 0.0;               // unserved immediately (fixed-load scenario)
    double departure_residual_kwh = 0.0; // what was still owed when everyone left
};

struct SaHourResult {
    double served_kw = 0.0;
    bool deferral_applied = false;
};

/// Applies one hour of charging. `hour` is the absolute hour index; the
/// station only operates up to the departure hour of the day (later calls are
/// contract violations). Under the deferrable scenario an unserved remainder
/// is spread evenly over the rest of the day; under the fixed scenario it is
/// shed on the spot.
SaHourResult sa_process_hour(StationDayState& day, int hour, double allocation_kw,
                             const PhevFleetConfig& cfg, int evse_count,
                             double station_efficiency, Scenario scenario);

/// Settles the day at departure: returns the uncharged energy (kWh at the
/// bus) and clears the ledger.
double sa_settle_departure(StationDayState& day, const PhevFleetConfig& cfg);

// ---------------------------------------------------------------------------
// Simulation log
// ---------------------------------------------------------------------------

struct HourRecord {
    double pv_kw = 0.0;
    double load_kw = 0.0;
    double station_request_kw = 0.0; // vehicle-side demand forecast by the station agent
    double station_served_kw = 0.0;  // bus-side power actually granted (P_PV-sta)
    double electrolyzer_in_kw = 0.0;
    double tank_charge_kw = 0.0;
    double tank_discharge_kw = 0.0;
    double fuel_cell_out_kw = 0.0;
    double dump_kw = 0.0;
    double tank_energy_kwh = 0.0;
    double unserved_load_kw = 0.0; // office demand that was shed this hour
};

struct DepartureRecord {
    int day = 0;
    double unserved_kwh = 0.0;  // Q_sta at the bus
    double requested_kwh = 0.0; // the day's total bus-side request (for the loss ratio)
};

struct SimulationLog {
    Scenario scenario = Scenario::FixedCharging;
    std::vector<HourRecord> hours;
    std::vector<DepartureRecord> departures;
    double initial_tank_kwh = 0.0;
    double final_tank_kwh = 0.0;
};

// ---------------------------------------------------------------------------
// Message protocol
// ---------------------------------------------------------------------------

enum class MessageKind {
    SizesAssigned,
    PvForecastRequest,
    PvForecastReply,
    LoadForecastRequest,
    LoadForecastReply,
    ChargeForecastRequest,
    ChargeForecastReply,
    StoreSurplus,
    SupplyShortage,
    StationAllocation,
    OperationReport,
    UnservedReport,
    RunRequest,
    RunResult,
};

struct GaReport {
    StoreFlows store{};
    SupplyFlows supply{};
    double unmet_kw = 0.0;
    double tank_energy_kwh = 0.0;
};

struct SaReport {
    double served_kw = 0.0;
    bool deferral_applied = false;
};

struct UnservedPayload {
    int day = 0;
    double q_sta_kwh = 0.0;
    double requested_kwh = 0.0;
};

struct RunRequestPayload {
    SystemSizing sizes;
    Scenario scenario = Scenario::FixedCharging;
};

struct RunSummary {
    double initial_tank_kwh = 0.0;
    double final_tank_kwh = 0.0;
    double unserved_load_kwh = 0.0;
    double unserved_station_kwh = 0.0;
};

using MessagePayload = std::variant<std::monostate, double, SystemSizing, GaReport, SaReport,
                                    UnservedPayload, RunRequestPayload, RunSummary>;

/// One envelope on a Fig.-2 channel. Agents exchange only these; none of
/// them reads another agent's state directly.
struct AgentMessage {
    MessageKind kind = MessageKind::RunRequest;
    int timestep = 0;
    MessagePayload payload{};
};

// ---------------------------------------------------------------------------
// Run-level configuration and driver
// ---------------------------------------------------------------------------

/// Everything about a run that is not part of the decision vector.
struct SimulationConfig {
    PvParams pv{};
    PhevFleetConfig fleet{};
    double electrolyzer_efficiency = 0.75;
    double fuel_cell_efficiency = 0.50;
    double converter_efficiency = 0.90;
    double station_efficiency = 0.90;
    double storage_efficiency = 0.95;
    double hhv_kwh_per_kg = 39.7;
    double tank_floor_fraction = 0.05;
    double initial_tank_fraction = 0.5;
    /// Plug count assumed when turning an arrival schedule into the station's
    /// unmanaged demand profile (the fixed-load input of scenario 1).
    int reference_evse_count = 7;

    DeviceRatings ratings_for(const SystemSizing& sizing) const;
    TankState initial_tank(const SystemSizing& sizing) const;
};

/// Station demand enters either as a ready profile or as a raw arrival
/// schedule, in which case the unmanaged profile is derived first.
using StationInput = std::variant<HourlyTimeSeries, DailyArrivalSchedule>;

/// Runs the hourly agent protocol over the whole horizon and returns the log.
/// Series must cover the same whole-day horizon (canonically 8760 h).
SimulationLog run_simulation(const SystemSizing& sizing, const HourlyTimeSeries& irradiance,
                             const HourlyTimeSeries& office_load, const StationInput& station,
                             Scenario scenario, const SimulationConfig& config);

/// Workday flags for a simulation horizon: the 5-of-7 pattern, trimmed to the
/// configured yearly count only when the horizon is a full year.
std::vector<bool> horizon_workdays(int num_days, const PhevFleetConfig& cfg);

} // namespace microgrid
