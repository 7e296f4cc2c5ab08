#include "microgrid/agents.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "microgrid/errors.hpp"

namespace microgrid {

Scenario scenario_from_name(const std::string& name) {
    if (name == "fixed") return Scenario::FixedCharging;
    if (name == "deferrable") return Scenario::DeferrableCharging;
    throw DomainError("unknown scenario '" + name + "' (expected fixed|deferrable)");
}

std::string scenario_name(Scenario s) {
    return s == Scenario::FixedCharging ? "fixed" : "deferrable";
}

// ---------------------------------------------------------------------------
// Dispatch rule
// ---------------------------------------------------------------------------

DispatchDecision dispatch_step(double pv_kw, double load_kw, double station_request_kw,
                               const DeviceRatings& ratings) {
    if (pv_kw < 0.0 || load_kw < 0.0 || station_request_kw < 0.0)
        throw DomainError("dispatch inputs must be >= 0");

    const double load_draw = load_kw / ratings.converter_efficiency;
    const double station_draw = station_request_kw / ratings.station_efficiency;

    DispatchDecision d;
    d.power_balance_kw = pv_kw - load_draw - station_draw;
    if (d.power_balance_kw > 0.0) {
        d.store_request_kw = d.power_balance_kw;
        d.station_allocation_kw = station_draw;
    } else if (d.power_balance_kw == 0.0) {
        d.station_allocation_kw = station_draw;
    } else {
        const double pv_vs_load = pv_kw - load_draw;
        d.pv_vs_load_kw = pv_vs_load;
        if (pv_vs_load > 0.0) {
            d.station_allocation_kw = pv_vs_load; // partial charging from what is left
        } else if (pv_vs_load < 0.0) {
            d.shortage_request_kw = -pv_vs_load;
        }
    }
    return d;
}

// ---------------------------------------------------------------------------
// Generation-agent actions
// ---------------------------------------------------------------------------

StoreResult ga_store_surplus(const TankState& tank, const DeviceRatings& ratings,
                             double surplus_kw) {
    if (surplus_kw < 0.0) throw DomainError("surplus must be >= 0");

    const double absorbed_kw = std::min(surplus_kw, ratings.electrolyzer_kw);
    const double hydrogen_kw = electrolyzer_output_kw(absorbed_kw, ratings);
    const TankStepResult step = tank_step(tank, hydrogen_kw, 0.0, 1.0);

    // Whatever bounced off a full tank is power the electrolyzer never
    // consumed; report it at the PV side and burn it with the rating clip.
    const double bounced_kw = ratings.electrolyzer_efficiency > 0.0
                                  ? step.overflow_kwh / ratings.electrolyzer_efficiency
                                  : 0.0;
    StoreResult result;
    result.tank = step.state;
    result.flows.electrolyzer_in_kw = absorbed_kw - bounced_kw;
    result.flows.tank_charge_kw = hydrogen_kw - step.overflow_kwh;
    result.flows.dump_kw = (surplus_kw - absorbed_kw) + bounced_kw;
    return result;
}

SupplyResult ga_supply_shortage(const TankState& tank, const DeviceRatings& ratings,
                                double shortage_kw) {
    if (shortage_kw < 0.0) throw DomainError("shortage must be >= 0");

    const double eta_fc = ratings.fuel_cell_efficiency;
    const double wanted_draw = shortage_kw / eta_fc;
    const double rating_draw = ratings.fuel_cell_kw / eta_fc;
    // The storage efficiency applies to withdrawal, so the draw the usable
    // energy supports is (energy - floor) / eta_storage over one hour.
    const double usable_kwh = std::max(0.0, tank.energy_kwh - tank.floor_kwh());
    const double available_draw = usable_kwh / tank.storage_efficiency;

    const double draw_kw = std::min({wanted_draw, rating_draw, available_draw});
    const double out_kw = fuel_cell_output_kw(draw_kw, ratings);
    const TankStepResult step = tank_step(tank, 0.0, draw_kw, 1.0);

    SupplyResult result;
    result.tank = step.state;
    result.flows.tank_discharge_kw = draw_kw;
    result.flows.fuel_cell_out_kw = out_kw;
    result.unmet_kw = std::max(0.0, shortage_kw - out_kw);
    return result;
}

// ---------------------------------------------------------------------------
// Station-agent day ledger
// ---------------------------------------------------------------------------

SaHourResult sa_process_hour(StationDayState& day, int hour, double allocation_kw,
                             const PhevFleetConfig& cfg, int evse_count,
                             double station_efficiency, Scenario scenario) {
    if (allocation_kw < 0.0) throw DomainError("station allocation must be >= 0");
    const int hod = hour % kHoursPerDay;
    if (hod > cfg.departure_hour)
        throw ContractError("station agent asked to charge after the departure hour");

    const double requested_kw = day.request_kw[hod];
    const double cap_kw = evse_count * cfg.charge_rate_kw / station_efficiency;
    const double servable_kw = std::min(requested_kw, cap_kw);
    const double served_kw = std::min(allocation_kw, servable_kw);

    day.request_kw[hod] = 0.0;
    day.served_kwh += served_kw;

    const double leftover_kw = requested_kw - served_kw;
    SaHourResult result{served_kw, false};
    if (leftover_kw <= 0.0) return result;

    const bool can_defer =
        scenario == Scenario::DeferrableCharging && day.workday && hod < cfg.departure_hour;
    if (!can_defer) {
        if (hod == cfg.departure_hour && scenario == Scenario::DeferrableCharging && day.workday)
            day.departure_residual_kwh += leftover_kw;
        else
            day.shed_kwh += leftover_kw;
        return result;
    }

    // Deferral: the dispatch shortfall is spread evenly over the remaining
    // hours up to departure; demand the plugs could not even present this
    // hour rolls into the next one and waits for free capacity.
    const double dispatch_shortfall_kw = servable_kw - served_kw;
    const double plug_excess_kw = requested_kw - servable_kw;
    const int hours_left = cfg.departure_hour - hod;
    const double per_hour = dispatch_shortfall_kw / hours_left;
    for (int h = hod + 1; h <= cfg.departure_hour; ++h) day.request_kw[h] += per_hour;
    day.request_kw[hod + 1] += plug_excess_kw;
    result.deferral_applied = true;
    return result;
}

double sa_settle_departure(StationDayState& day, const PhevFleetConfig& cfg) {
    (void)cfg;
    const double q_sta = day.shed_kwh + day.departure_residual_kwh;
    day.request_kw.fill(0.0);
    day.served_kwh = 0.0;
    day.shed_kwh = 0.0;
    day.departure_residual_kwh = 0.0;
    return q_sta;
}

std::vector<bool> horizon_workdays(int num_days, const PhevFleetConfig& cfg) {
    const bool full_year = num_days == 365;
    return workday_calendar(num_days, full_year ? cfg.workdays_per_year : -1);
}

// ---------------------------------------------------------------------------
// Agents
// ---------------------------------------------------------------------------

DeviceRatings SimulationConfig::ratings_for(const SystemSizing& sizing) const {
    DeviceRatings r;
    r.electrolyzer_kw = sizing.electrolyzer_kw;
    r.fuel_cell_kw = sizing.fuel_cell_kw;
    r.converter_kw = sizing.converter_kw;
    r.electrolyzer_efficiency = electrolyzer_efficiency;
    r.fuel_cell_efficiency = fuel_cell_efficiency;
    r.converter_efficiency = converter_efficiency;
    r.station_efficiency = station_efficiency;
    return r;
}

TankState SimulationConfig::initial_tank(const SystemSizing& sizing) const {
    TankState t;
    t.rated_mass_kg = sizing.tank_kg;
    t.hhv_kwh_per_kg = hhv_kwh_per_kg;
    t.floor_fraction = tank_floor_fraction;
    t.storage_efficiency = storage_efficiency;
    t.energy_kwh = std::clamp(initial_tank_fraction * t.capacity_kwh(), t.floor_kwh(),
                              t.capacity_kwh());
    return t;
}

namespace {

[[noreturn]] void unexpected_message(const char* agent, MessageKind kind) {
    throw ContractError(std::string(agent) + " received an unexpected message kind #" +
                        std::to_string(static_cast<int>(kind)));
}

/// Owns PV arrays, electrolyzer, tank, and fuel cell.
class GenerationAgent {
public:
    GenerationAgent(const SimulationConfig& config, const HourlyTimeSeries& irradiance)
        : config_(config), irradiance_(irradiance) {}

    AgentMessage handle(const AgentMessage& msg) {
        switch (msg.kind) {
        case MessageKind::SizesAssigned: {
            const auto& sizes = std::get<SystemSizing>(msg.payload);
            sizing_ = sizes;
            ratings_ = config_.ratings_for(sizes);
            tank_ = config_.initial_tank(sizes);
            return {MessageKind::OperationReport, msg.timestep, make_report()};
        }
        case MessageKind::PvForecastRequest: {
            const double g = irradiance_.values[static_cast<std::size_t>(msg.timestep)];
            const double pv = pv_output_kw(config_.pv, sizing_.pv_count, g);
            return {MessageKind::PvForecastReply, msg.timestep, pv};
        }
        case MessageKind::StoreSurplus: {
            const StoreResult r = ga_store_surplus(tank_, ratings_, std::get<double>(msg.payload));
            tank_ = r.tank;
            GaReport report = make_report();
            report.store = r.flows;
            return {MessageKind::OperationReport, msg.timestep, report};
        }
        case MessageKind::SupplyShortage: {
            const SupplyResult r =
                ga_supply_shortage(tank_, ratings_, std::get<double>(msg.payload));
            tank_ = r.tank;
            GaReport report = make_report();
            report.supply = r.flows;
            report.unmet_kw = r.unmet_kw;
            return {MessageKind::OperationReport, msg.timestep, report};
        }
        default:
            unexpected_message("generation agent", msg.kind);
        }
    }

    double initial_tank_kwh() const { return initial_kwh_; }
    void mark_initial() { initial_kwh_ = tank_.energy_kwh; }

private:
    GaReport make_report() const {
        GaReport r;
        r.tank_energy_kwh = tank_.energy_kwh;
        return r;
    }

    const SimulationConfig& config_;
    const HourlyTimeSeries& irradiance_;
    SystemSizing sizing_{};
    DeviceRatings ratings_{};
    TankState tank_{};
    double initial_kwh_ = 0.0;
};

/// Aggregates the office demand; a simple reflex agent.
class LoadAgent {
public:
    explicit LoadAgent(const HourlyTimeSeries& load) : load_(load) {}

    AgentMessage handle(const AgentMessage& msg) const {
        if (msg.kind != MessageKind::LoadForecastRequest)
            unexpected_message("load agent", msg.kind);
        return {MessageKind::LoadForecastReply, msg.timestep,
                load_.values[static_cast<std::size_t>(msg.timestep)]};
    }

private:
    const HourlyTimeSeries& load_;
};

/// Manages the charging station: forecasts demand, applies allocations,
/// defers what it may, and reports the uncharged energy at departure.
class StationAgent {
public:
    StationAgent(const SimulationConfig& config, const HourlyTimeSeries& demand,
                 Scenario scenario)
        : config_(config),
          demand_(demand),
          scenario_(scenario),
          workdays_(horizon_workdays(demand.days(), config.fleet)) {}

    AgentMessage handle(const AgentMessage& msg) {
        switch (msg.kind) {
        case MessageKind::SizesAssigned:
            evse_count_ = std::get<SystemSizing>(msg.payload).evse_count;
            return {MessageKind::OperationReport, msg.timestep, SaReport{}};
        case MessageKind::ChargeForecastRequest: {
            ensure_day(msg.timestep);
            return {MessageKind::ChargeForecastReply, msg.timestep, forecast_kw(msg.timestep)};
        }
        case MessageKind::StationAllocation: {
            ensure_day(msg.timestep);
            const int hod = msg.timestep % kHoursPerDay;
            SaReport report;
            if (hod <= config_.fleet.departure_hour) {
                const SaHourResult r =
                    sa_process_hour(day_, msg.timestep, std::get<double>(msg.payload),
                                    config_.fleet, evse_count_, config_.station_efficiency,
                                    scenario_);
                report.served_kw = r.served_kw;
                report.deferral_applied = r.deferral_applied;
                if (hod == config_.fleet.departure_hour && day_.workday) settle(msg.timestep);
            }
            return {MessageKind::OperationReport, msg.timestep, report};
        }
        default:
            unexpected_message("station agent", msg.kind);
        }
    }

    /// Departure settlements are pushed CA-ward; the control agent drains
    /// them after each allocation exchange.
    std::optional<AgentMessage> take_unserved_report() {
        auto out = std::move(pending_);
        pending_.reset();
        return out;
    }

private:
    double forecast_kw(int t) const {
        const int hod = t % kHoursPerDay;
        if (hod > config_.fleet.departure_hour) return 0.0;
        const double cap_kw =
            evse_count_ * config_.fleet.charge_rate_kw / config_.station_efficiency;
        const double servable_kw = std::min(day_.request_kw[hod], cap_kw);
        return servable_kw * config_.station_efficiency; // vehicle-side P_sta
    }

    void ensure_day(int t) {
        const int day_index = t / kHoursPerDay;
        if (day_loaded_ && day_.day == day_index) return;
        day_ = StationDayState{};
        day_.day = day_index;
        day_.workday = workdays_[static_cast<std::size_t>(day_index)];
        const std::size_t base = static_cast<std::size_t>(day_index) * kHoursPerDay;
        for (int h = 0; h < kHoursPerDay; ++h) {
            const double draw =
                demand_.values[base + static_cast<std::size_t>(h)] / config_.station_efficiency;
            day_.original_request_kwh += draw;
            if (h <= config_.fleet.departure_hour)
                day_.request_kw[h] = draw;
            else
                day_.shed_kwh += draw; // demand after departure can never be met
        }
        day_loaded_ = true;
    }

    void settle(int t) {
        UnservedPayload payload;
        payload.day = day_.day;
        payload.requested_kwh = day_.original_request_kwh;
        payload.q_sta_kwh = sa_settle_departure(day_, config_.fleet);
        pending_ = AgentMessage{MessageKind::UnservedReport, t, payload};
    }

    const SimulationConfig& config_;
    const HourlyTimeSeries& demand_;
    Scenario scenario_;
    std::vector<bool> workdays_;
    int evse_count_ = 0;
    StationDayState day_{};
    bool day_loaded_ = false;
    std::optional<AgentMessage> pending_;
};

/// Coordinates the field-level agents hour by hour and assembles the log.
class ControlAgent {
public:
    ControlAgent(GenerationAgent& ga, LoadAgent& la, StationAgent& sa,
                 const SimulationConfig& config, int hours)
        : ga_(ga), la_(la), sa_(sa), config_(config), hours_(hours) {}

    AgentMessage handle(const AgentMessage& msg) {
        if (msg.kind != MessageKind::RunRequest)
            unexpected_message("control agent", msg.kind);
        const auto& request = std::get<RunRequestPayload>(msg.payload);
        run(request);
        RunSummary summary;
        summary.initial_tank_kwh = log_.initial_tank_kwh;
        summary.final_tank_kwh = log_.final_tank_kwh;
        for (const auto& h : log_.hours) summary.unserved_load_kwh += h.unserved_load_kw;
        for (const auto& d : log_.departures) summary.unserved_station_kwh += d.unserved_kwh;
        return {MessageKind::RunResult, hours_ - 1, summary};
    }

    SimulationLog take_log() { return std::move(log_); }

private:
    void run(const RunRequestPayload& request) {
        const DeviceRatings ratings = config_.ratings_for(request.sizes);

        log_ = SimulationLog{};
        log_.scenario = request.scenario;
        log_.hours.resize(static_cast<std::size_t>(hours_));
        log_.initial_tank_kwh = config_.initial_tank(request.sizes).energy_kwh;

        AgentMessage assign{MessageKind::SizesAssigned, 0, request.sizes};
        ga_.handle(assign);
        sa_.handle(assign);

        for (int t = 0; t < hours_; ++t) {
            HourRecord& rec = log_.hours[static_cast<std::size_t>(t)];

            // Field-level forecasts.
            const double pv_kw =
                std::get<double>(ga_.handle({MessageKind::PvForecastRequest, t}).payload);
            const double load_kw =
                std::get<double>(la_.handle({MessageKind::LoadForecastRequest, t}).payload);
            const double station_kw =
                std::get<double>(sa_.handle({MessageKind::ChargeForecastRequest, t}).payload);

            // Coordination decision.
            const DispatchDecision decision = dispatch_step(pv_kw, load_kw, station_kw, ratings);

            // Generation-agent action.
            GaReport ga_report;
            if (decision.store_request_kw > 0.0) {
                ga_report = std::get<GaReport>(
                    ga_.handle({MessageKind::StoreSurplus, t, decision.store_request_kw})
                        .payload);
            } else if (decision.shortage_request_kw > 0.0) {
                ga_report = std::get<GaReport>(
                    ga_.handle({MessageKind::SupplyShortage, t, decision.shortage_request_kw})
                        .payload);
            } else {
                ga_report = std::get<GaReport>(
                    ga_.handle({MessageKind::StoreSurplus, t, 0.0}).payload);
            }

            // Station-agent action.
            const SaReport sa_report = std::get<SaReport>(
                sa_.handle({MessageKind::StationAllocation, t, decision.station_allocation_kw})
                    .payload);
            if (auto unserved = sa_.take_unserved_report()) {
                const auto& p = std::get<UnservedPayload>(unserved->payload);
                log_.departures.push_back({p.day, p.q_sta_kwh, p.requested_kwh});
            }

            // Office service and loss-of-load accounting. Under a shortage
            // every PV watt plus the fuel-cell output feeds the converter;
            // otherwise the office draw was fully reserved in the balance.
            const double fc_out_kw = ga_report.supply.fuel_cell_out_kw;
            double served_ac_kw;
            double converter_spill_kw = 0.0; // bus power the converter cap refused
            if (decision.shortage_request_kw > 0.0) {
                const double bus_for_load_kw = pv_kw + fc_out_kw;
                served_ac_kw = std::min({load_kw, bus_for_load_kw * ratings.converter_efficiency,
                                         ratings.converter_kw});
                converter_spill_kw = bus_for_load_kw - served_ac_kw / ratings.converter_efficiency;
            } else {
                served_ac_kw = std::min(load_kw, ratings.converter_kw);
                converter_spill_kw = (load_kw - served_ac_kw) / ratings.converter_efficiency;
            }

            rec.pv_kw = pv_kw;
            rec.load_kw = load_kw;
            rec.station_request_kw = station_kw;
            rec.station_served_kw = sa_report.served_kw;
            rec.electrolyzer_in_kw = ga_report.store.electrolyzer_in_kw;
            rec.tank_charge_kw = ga_report.store.tank_charge_kw;
            rec.tank_discharge_kw = ga_report.supply.tank_discharge_kw;
            rec.fuel_cell_out_kw = fc_out_kw;
            rec.dump_kw = ga_report.store.dump_kw + converter_spill_kw;
            rec.tank_energy_kwh = ga_report.tank_energy_kwh;
            rec.unserved_load_kw = load_kw - served_ac_kw;
        }
        log_.final_tank_kwh =
            log_.hours.empty() ? log_.initial_tank_kwh : log_.hours.back().tank_energy_kwh;
    }

    GenerationAgent& ga_;
    LoadAgent& la_;
    StationAgent& sa_;
    const SimulationConfig& config_;
    int hours_;
    SimulationLog log_;
};

} // namespace

SimulationLog run_simulation(const SystemSizing& sizing, const HourlyTimeSeries& irradiance,
                             const HourlyTimeSeries& office_load, const StationInput& station,
                             Scenario scenario, const SimulationConfig& config) {
    if (sizing.pv_count < 0 || sizing.electrolyzer_kw < 0.0 || sizing.tank_kg < 0.0 ||
        sizing.fuel_cell_kw < 0.0 || sizing.converter_kw < 0.0 || sizing.evse_count < 0)
        throw DomainError("sizing dimensions must be >= 0");
    for (double eta : {config.electrolyzer_efficiency, config.fuel_cell_efficiency,
                       config.converter_efficiency, config.station_efficiency,
                       config.storage_efficiency})
        if (!(eta > 0.0 && eta <= 1.0))
            throw DomainError("efficiencies must lie in (0, 1]");
    if (irradiance.quantity != Quantity::IrradianceWPerM2)
        throw DomainError("irradiance series has the wrong quantity");
    if (office_load.quantity != Quantity::LoadKw)
        throw DomainError("office load series has the wrong quantity");

    const HourlyTimeSeries* station_profile = std::get_if<HourlyTimeSeries>(&station);
    HourlyTimeSeries derived;
    if (!station_profile) {
        derived = unmanaged_charging_profile(std::get<DailyArrivalSchedule>(station),
                                             config.fleet, config.reference_evse_count);
        station_profile = &derived;
    }
    if (station_profile->quantity != Quantity::ChargingKw)
        throw DomainError("station series has the wrong quantity");

    const int hours = irradiance.hours();
    if (office_load.hours() != hours || station_profile->hours() != hours)
        throw LengthError("irradiance, load, and station series must cover the same horizon");

    GenerationAgent ga(config, irradiance);
    LoadAgent la(office_load);
    StationAgent sa(config, *station_profile, scenario);
    ControlAgent ca(ga, la, sa, config, hours);

    ca.handle({MessageKind::RunRequest, 0, RunRequestPayload{sizing, scenario}});
    return ca.take_log();
}

} // namespace microgrid
