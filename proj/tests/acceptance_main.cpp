// Acceptance suite: runs every release criterion end to end and prints one
// PASS/FAIL line per criterion. Exit code is the number of failures.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "microgrid/io.hpp"
#include "microgrid/rng.hpp"
#include "microgrid/workflows.hpp"

using namespace microgrid;
namespace fs = std::filesystem;

namespace {

int checks_run = 0;
int checks_failed = 0;
std::string first_failure;

void expect(bool ok, const std::string& what) {
    ++checks_run;
    if (!ok) {
        ++checks_failed;
        if (first_failure.empty()) first_failure = what;
    }
}

bool close_rel(double actual, double expected, double tol) {
    if (expected == 0.0) return std::abs(actual) <= tol;
    return std::abs(actual - expected) <= tol * std::abs(expected);
}

void expect_rel(double actual, double expected, double tol, const std::string& what) {
    std::ostringstream ss;
    ss << what << ": got " << actual << ", want " << expected << " (tol " << tol << ")";
    expect(close_rel(actual, expected, tol), ss.str());
}

// Convergence traces from every optimization run end up here; criterion 7
// checks them all.
std::vector<std::vector<IterationTrace>> all_traces;

// ---------------------------------------------------------------------------
// 1. Equation oracles
// ---------------------------------------------------------------------------

bool criterion1(std::string& detail) {
    const PvParams pv{};
    expect_rel(pv_output_kw(pv, 1, 1000.0), 0.2926, 1e-6, "pv 1x1000");
    expect_rel(pv_output_kw(pv, 384, 1000.0), 112.3584, 1e-6, "pv 384x1000");
    expect_rel(pv_output_kw(pv, 384, 0.0), 0.0, 1e-12, "pv dark");

    DeviceRatings r;
    r.electrolyzer_kw = 49.73;
    r.fuel_cell_kw = 48.31;
    expect_rel(electrolyzer_output_kw(10.0, r), 7.5, 1e-6, "electrolyzer 10");
    expect_rel(electrolyzer_output_kw(49.73, r), 37.2975, 1e-6, "electrolyzer rated");
    expect_rel(fuel_cell_output_kw(10.0, r), 5.0, 1e-6, "fuel cell 10");
    expect_rel(fuel_cell_output_kw(96.62, r), 48.31, 1e-6, "fuel cell rated draw");

    TankState t;
    t.rated_mass_kg = 100.0;
    t.energy_kwh = 300.0;
    expect_rel(tank_step(t, 10.0, 0.0, 1.0).state.energy_kwh, 310.0, 1e-6, "tank charge");
    expect_rel(tank_step(t, 0.0, 10.0, 1.0).state.energy_kwh, 290.5, 1e-6, "tank discharge");
    expect_rel(tank_step(t, 0.0, 0.0, 1.0).state.energy_kwh, 300.0, 1e-12, "tank idle");

    const auto b1 = tank_bounds(1.0);
    expect_rel(b1.floor_kwh, 1.985, 1e-6, "bounds floor 1kg");
    expect_rel(b1.capacity_kwh, 39.7, 1e-6, "bounds cap 1kg");
    const auto b2 = tank_bounds(52.63);
    expect_rel(b2.floor_kwh, 104.47055, 1e-6, "bounds floor 52.63kg");
    expect_rel(b2.capacity_kwh, 2089.411, 1e-6, "bounds cap 52.63kg");

    // Discount factors: frozen full-precision hand sums, plus the spec's
    // rounded figures at their own print precision.
    expect_rel(single_payment_present_worth(20, 0.06, 20), 0.0, 1e-12, "K lifetime=R");
    expect_rel(single_payment_present_worth(5, 0.06, 20), 1.7229180105167161, 1e-6, "K 5yr");
    expect_rel(single_payment_present_worth(5, 0.06, 20), 1.7230, 1e-4, "K 5yr (rounded)");
    expect_rel(single_payment_present_worth(15, 0.06, 20), 0.4172650607355408, 1e-6, "K 15yr");
    expect_rel(present_worth_annuity(0.06, 20), 11.469921218565257, 1e-6, "PWA 20yr");
    expect_rel(present_worth_annuity(0.06, 1), 0.9433962264150943, 1e-6, "PWA 1yr");
    expect_rel(present_worth_annuity(0.0, 20), 20.0, 1e-12, "PWA zero-rate limit");

    const auto catalog = ComponentCatalog::defaults();
    expect_rel(component_npc(catalog.pv, 384, 0.06, 20), 768000.0, 1e-6, "npc pv 384");
    expect_rel(component_npc(catalog.fuel_cell, 1, 0.06, 20), 5731.3691376316, 1e-6,
               "npc fc 1kW");
    expect_rel(component_npc(catalog.fuel_cell, 1, 0.06, 20), 5731.49, 1e-4,
               "npc fc 1kW (rounded)");
    expect_rel(component_npc(catalog.tank, 0, 0.06, 20), 0.0, 1e-12, "npc zero size");

    // Loss factors on constructed logs.
    SimulationLog log;
    log.hours.resize(8760);
    for (auto& h : log.hours) h.load_kw = 50.0;
    expect_rel(elf_load(log), 0.0, 1e-12, "elf_load served");
    log.hours[100].unserved_load_kw = 50.0;
    expect_rel(elf_load(log), 1.0 / 8760.0, 1e-6, "elf_load one hour");
    for (auto& h : log.hours) h.unserved_load_kw = h.load_kw;
    expect_rel(elf_load(log), 1.0, 1e-12, "elf_load blackout");

    SimulationLog slog;
    slog.hours.resize(24);
    for (int d = 0; d < 261; ++d) slog.departures.push_back({d, 0.0, 100.0});
    expect_rel(elf_station(slog, 261), 0.0, 1e-12, "elf_sta served");
    for (auto& dep : slog.departures) dep.unserved_kwh = 50.0;
    expect_rel(elf_station(slog, 261), 0.5, 1e-6, "elf_sta half");
    for (auto& dep : slog.departures) dep.unserved_kwh = 0.0;
    slog.departures[17].unserved_kwh = 100.0;
    expect_rel(elf_station(slog, 261), 1.0 / 261.0, 1e-6, "elf_sta one day");

    detail = "hand oracles for Eqs (1)-(5), (10), (12)-(13) and the discount factors";
    return checks_failed == 0;
}

// ---------------------------------------------------------------------------
// 2. Golden 24-hour trace
// ---------------------------------------------------------------------------

bool criterion2(std::string& detail) {
    SimulationConfig sim;
    sim.pv.generator_efficiency = 0.2;
    sim.pv.module_area_m2 = 2.0;
    sim.fleet.fleet_size = 1;
    sim.fleet.arrival_start_hour = 9.0;
    sim.fleet.arrival_end_hour = 10.0;
    sim.fleet.departure_hour = 12;
    sim.fleet.demand_upper_kwh = 8.0;
    sim.converter_efficiency = 0.8;
    sim.station_efficiency = 0.8;
    sim.hhv_kwh_per_kg = 40.0;

    const SystemSizing sizing{25, 2.0, 0.475, 1.0, 10.0, 2};
    std::vector<double> g(24, 0.0), load(24, 0.0), station(24, 0.0);
    g[10] = 500.0;
    g[11] = 1000.0;
    g[12] = 800.0;
    for (int h = 0; h <= 9; ++h) load[h] = 0.4;
    for (int h = 10; h <= 12; ++h) load[h] = 3.2;
    load[13] = load[14] = 0.4;
    station[9] = 4.8;
    station[10] = 1.2;

    const auto log = run_simulation(
        sizing, make_series(Quantity::IrradianceWPerM2, g), make_series(Quantity::LoadKw, load),
        StationInput{make_series(Quantity::ChargingKw, station)}, Scenario::DeferrableCharging,
        sim);

    // columns: pv load sta_req sta_served el_in charge discharge fc dump tank q_load
    const double X[24][11] = {
        {0, 0.4, 0, 0, 0, 0, 1, 0.5, 0, 8.55, 0},
        {0, 0.4, 0, 0, 0, 0, 1, 0.5, 0, 7.60, 0},
        {0, 0.4, 0, 0, 0, 0, 1, 0.5, 0, 6.65, 0},
        {0, 0.4, 0, 0, 0, 0, 1, 0.5, 0, 5.70, 0},
        {0, 0.4, 0, 0, 0, 0, 1, 0.5, 0, 4.75, 0},
        {0, 0.4, 0, 0, 0, 0, 1, 0.5, 0, 3.80, 0},
        {0, 0.4, 0, 0, 0, 0, 1, 0.5, 0, 2.85, 0},
        {0, 0.4, 0, 0, 0, 0, 1, 0.5, 0, 1.90, 0},
        {0, 0.4, 0, 0, 0, 0, 1, 0.5, 0, 0.95, 0},
        {0, 0.4, 4.8, 0, 0, 0, 0, 0, 0, 0.95, 0.4},
        {5, 3.2, 2.8, 1.0, 0, 0, 0, 0, 0, 0.95, 0},
        {10, 3.2, 2.6, 3.25, 2.0, 1.5, 0, 0, 0.75, 2.45, 0},
        {8, 3.2, 2.6, 3.25, 0.75, 0.5625, 0, 0, 0, 3.0125, 0},
        {0, 0.4, 0, 0, 0, 0, 1, 0.5, 0, 2.0625, 0},
        {0, 0.4, 0, 0, 0, 0, 1, 0.5, 0, 1.1125, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 1.1125, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 1.1125, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 1.1125, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 1.1125, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 1.1125, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 1.1125, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 1.1125, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 1.1125, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 1.1125, 0},
    };
    for (int h = 0; h < 24; ++h) {
        const HourRecord& r = log.hours[h];
        const double got[11] = {r.pv_kw,           r.load_kw,        r.station_request_kw,
                                r.station_served_kw, r.electrolyzer_in_kw, r.tank_charge_kw,
                                r.tank_discharge_kw, r.fuel_cell_out_kw,   r.dump_kw,
                                r.tank_energy_kwh,   r.unserved_load_kw};
        for (int c = 0; c < 11; ++c)
            expect(std::abs(got[c] - X[h][c]) < 1e-9,
                   "golden trace hour " + std::to_string(h) + " column " + std::to_string(c));
    }
    expect(log.departures.size() == 1, "golden trace has one departure");
    expect(std::abs(log.departures[0].unserved_kwh) < 1e-9, "golden departure residual");
    expect(std::abs(log.departures[0].requested_kwh - 7.5) < 1e-9, "golden departure request");
    detail = "24 hours x 11 flows, deferral, settlement, storage, shedding";
    return true;
}

// ---------------------------------------------------------------------------
// 3. Property suite over randomized year-long runs
// ---------------------------------------------------------------------------

struct World {
    HourlyTimeSeries irradiance, office, station;
    SimulationConfig sim;
};

World random_world(std::mt19937_64& rng) {
    World w;
    w.sim.fleet.fleet_size = 1 + static_cast<int>(uniform_in(rng, 0.0, 60.0));
    w.sim.fleet.arrival_start_hour = uniform_in(rng, 0.0, 8.0);
    w.sim.fleet.arrival_end_hour = w.sim.fleet.arrival_start_hour + uniform_in(rng, 0.5, 3.0);
    w.sim.fleet.departure_hour =
        static_cast<int>(std::ceil(w.sim.fleet.arrival_end_hour + uniform_in(rng, 1.0, 6.0)));
    w.sim.fleet.rng_seed = rng();
    w.sim.initial_tank_fraction = uniform_in(rng, 0.1, 0.9);
    w.irradiance = synthesize_irradiance(rng());
    w.office = synthesize_office_load(uniform_in(rng, 20.0, 90.0), rng());
    const auto schedule = synthesize_phev_fleet(w.sim.fleet);
    w.station = unmanaged_charging_profile(schedule, w.sim.fleet,
                                           std::max(1, w.sim.fleet.fleet_size / 4));
    return w;
}

SystemSizing random_sizing(std::mt19937_64& rng) {
    SystemSizing s;
    s.pv_count = static_cast<int>(uniform_in(rng, 0.0, 900.0));
    s.electrolyzer_kw = uniform_in(rng, 0.0, 150.0);
    s.tank_kg = uniform_in(rng, 0.0, 150.0);
    s.fuel_cell_kw = uniform_in(rng, 0.0, 150.0);
    s.converter_kw = uniform_in(rng, 0.0, 150.0);
    s.evse_count = static_cast<int>(uniform_in(rng, 0.0, 40.0));
    return s;
}

bool criterion3(std::string& detail) {
    std::mt19937_64 rng(20240811);
    const int worlds = 25, sizings_per_world = 40; // 1000 full-year runs
    long runs = 0;
    const int failed_before = checks_failed;

    for (int wi = 0; wi < worlds; ++wi) {
        const World w = random_world(rng);
        const TankBounds bounds =
            tank_bounds(0.0, w.sim.hhv_kwh_per_kg, w.sim.tank_floor_fraction);
        (void)bounds;
        for (int si = 0; si < sizings_per_world; ++si) {
            const SystemSizing sizing = random_sizing(rng);
            const Scenario scenario =
                (runs % 2 == 0) ? Scenario::DeferrableCharging : Scenario::FixedCharging;
            const auto log = run_simulation(sizing, w.irradiance, w.office,
                                            StationInput{w.station}, scenario, w.sim);
            ++runs;

            const TankBounds tb =
                tank_bounds(sizing.tank_kg, w.sim.hhv_kwh_per_kg, w.sim.tank_floor_fraction);
            double max_residual = 0.0;
            bool tank_ok = true, excl_ok = true, surplus_ok = true;
            for (const auto& h : log.hours) {
                const double served = h.load_kw - h.unserved_load_kw;
                const double residual =
                    h.pv_kw - (served / w.sim.converter_efficiency + h.station_served_kw +
                               h.electrolyzer_in_kw + h.dump_kw - h.fuel_cell_out_kw);
                max_residual = std::max(max_residual, std::abs(residual));
                tank_ok = tank_ok && h.tank_energy_kwh >= tb.floor_kwh - 1e-9 &&
                          h.tank_energy_kwh <= tb.capacity_kwh + 1e-9;
                excl_ok = excl_ok && !(h.tank_charge_kw > 1e-12 && h.tank_discharge_kw > 1e-12);
                const double surplus =
                    std::max(0.0, h.pv_kw - h.load_kw / w.sim.converter_efficiency);
                surplus_ok = surplus_ok && h.station_served_kw <= surplus + 1e-9;
            }
            expect(max_residual <= 1e-9, "bus balance residual " + std::to_string(max_residual));
            expect(tank_ok, "tank bounds violated");
            expect(excl_ok, "charge/discharge exclusivity violated");
            expect(surplus_ok, "station served beyond PV surplus");

            if (scenario == Scenario::DeferrableCharging) {
                std::vector<double> served_by_day(w.station.days(), 0.0);
                for (std::size_t t = 0; t < log.hours.size(); ++t)
                    served_by_day[t / 24] += log.hours[t].station_served_kw;
                bool conserve_ok = true;
                for (const auto& dep : log.departures) {
                    double requested = 0.0;
                    for (int h = 0; h < 24; ++h)
                        requested +=
                            w.station.values[dep.day * 24 + h] / w.sim.station_efficiency;
                    conserve_ok = conserve_ok &&
                                  std::abs(served_by_day[dep.day] + dep.unserved_kwh -
                                           requested) <= 1e-6;
                }
                expect(conserve_ok, "deferral conservation violated");
            }

            if (runs % 10 == 0) { // determinism spot checks
                const auto again = run_simulation(sizing, w.irradiance, w.office,
                                                  StationInput{w.station}, scenario, w.sim);
                bool identical = again.hours.size() == log.hours.size() &&
                                 again.final_tank_kwh == log.final_tank_kwh;
                for (std::size_t t = 0; identical && t < log.hours.size(); ++t)
                    identical = again.hours[t].tank_energy_kwh == log.hours[t].tank_energy_kwh &&
                                again.hours[t].dump_kw == log.hours[t].dump_kw &&
                                again.hours[t].station_served_kw ==
                                    log.hours[t].station_served_kw;
                expect(identical, "simulation not bit-deterministic");
            }
        }
    }
    detail = std::to_string(runs) + " randomized year runs; balance<=1e-9 kW, bounds, "
             "exclusivity, surplus-only, conservation<=1e-6 kWh, determinism";
    return checks_failed == failed_before;
}

// ---------------------------------------------------------------------------
// 4. Brute-force equivalence on a 48-hour horizon
// ---------------------------------------------------------------------------

bool criterion4(std::string& detail) {
    World w;
    std::vector<double> g(48, 0.0), load(48, 2.0), sta(48, 0.0);
    for (int d = 0; d < 2; ++d) {
        for (int h = 8; h <= 16; ++h) g[d * 24 + h] = 800.0;
        for (int h = 9; h <= 12; ++h) sta[d * 24 + h] = 1.0;
    }
    w.irradiance = make_series(Quantity::IrradianceWPerM2, g);
    w.office = make_series(Quantity::LoadKw, load);
    w.station = make_series(Quantity::ChargingKw, sta);

    const auto catalog = ComponentCatalog::defaults();
    EvaluationContext ctx;
    ctx.irradiance = &w.irradiance;
    ctx.office_load = &w.office;
    ctx.station_profile = &w.station;
    ctx.catalog = &catalog;
    ctx.scenario = Scenario::FixedCharging;
    ctx.sim = w.sim;

    PsoConfig base;
    base.swarm_size = 24;
    base.max_iterations = 40;
    base.bounds = {Bounds{0, 40}, Bounds{0, 8}, Bounds{0, 8}, Bounds{0, 8}, Bounds{0, 8},
                   Bounds{0, 4}};

    // Exhaustive oracle: 3 levels per dimension, 729 points (<= 5^6).
    double grid_best = std::numeric_limits<double>::infinity();
    const int levels = 3;
    for (int i = 0; i < 729; ++i) {
        int code = i;
        std::array<double, kSizingDims> x{};
        for (int d = 0; d < kSizingDims; ++d) {
            const int level = code % levels;
            code /= levels;
            x[d] = base.bounds[d].lo +
                   (base.bounds[d].hi - base.bounds[d].lo) * level / (levels - 1.0);
        }
        grid_best = std::min(grid_best, evaluate_candidate(x, ctx).penalized_cost);
    }

    int hits = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        PsoConfig cfg = base;
        cfg.rng_seed = seed;
        const auto result = pso_optimize(cfg, ctx);
        all_traces.push_back(result.convergence);
        const double cost =
            result.feasible_found ? result.best_cost : result.best_cost; // penalized when infeasible
        if (cost <= grid_best * 1.05) ++hits;
    }
    std::ostringstream ss;
    ss << "grid optimum $" << std::fixed << grid_best << "; swarm within 1.05x in " << hits
       << "/10 seeds";
    detail = ss.str();
    expect(hits >= 9, "PSO beat the 1.05x grid bound in only " + std::to_string(hits) +
                          "/10 seeds");
    return hits >= 9;
}

// ---------------------------------------------------------------------------
// 5. Directional reproduction of the two-scenario comparison
// ---------------------------------------------------------------------------

bool criterion5(std::string& detail) {
    int cost_ok = 0, pv_ok = 0, evse_ok = 0, all_ok = 0, feasible_both = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        RunConfig config;
        apply_master_seed(config, seed);
        const auto fixed = run_optimization(config, Scenario::FixedCharging);
        const auto deferrable = run_optimization(config, Scenario::DeferrableCharging);
        all_traces.push_back(fixed.result.convergence);
        all_traces.push_back(deferrable.result.convergence);

        const bool c = deferrable.result.best_cost <= fixed.result.best_cost;
        const bool p = deferrable.result.best_sizing.pv_count <= fixed.result.best_sizing.pv_count;
        const bool e =
            deferrable.result.best_sizing.evse_count >= fixed.result.best_sizing.evse_count;
        cost_ok += c;
        pv_ok += p;
        evse_ok += e;
        all_ok += (c && p && e);
        feasible_both += (fixed.result.feasible_found && deferrable.result.feasible_found);
        std::printf("    seed %2llu: S1(pv %4d evse %2d $%.0f) S2(pv %4d evse %2d $%.0f)%s%s%s\n",
                    static_cast<unsigned long long>(seed), fixed.result.best_sizing.pv_count,
                    fixed.result.best_sizing.evse_count, fixed.result.best_cost,
                    deferrable.result.best_sizing.pv_count,
                    deferrable.result.best_sizing.evse_count, deferrable.result.best_cost,
                    c ? "" : " [cost up]", p ? "" : " [pv up]", e ? "" : " [evse down]");
    }
    std::ostringstream ss;
    ss << "legs over 10 seeds: cost<= " << cost_ok << ", pv<= " << pv_ok << ", evse>= "
       << evse_ok << ", all three " << all_ok << ", both feasible " << feasible_both;
    detail = ss.str();
    expect(all_ok >= 8, "directional triple held in only " + std::to_string(all_ok) +
                            "/10 seeds");
    return all_ok >= 8;
}

// ---------------------------------------------------------------------------
// 6. Feasibility of emitted optima (re-simulated from the emitted files)
// ---------------------------------------------------------------------------

bool criterion6(std::string& detail) {
    const int failed_before = checks_failed;
    const fs::path dir = fs::temp_directory_path() / "microgrid_acceptance6";
    fs::remove_all(dir);

    std::ostringstream captured;
    for (const Scenario scenario : {Scenario::FixedCharging, Scenario::DeferrableCharging}) {
        RunConfig config;
        apply_master_seed(config, 1);
        config.scenario = scenario;
        config.output_dir = dir;

        auto* old = std::cout.rdbuf(captured.rdbuf());
        const int rc = cmd_optimize(config);
        std::cout.rdbuf(old);
        expect(rc == 0, "cmd_optimize exit code");

        const auto emitted =
            read_sizing_csv(dir / ("best_sizing_" + scenario_name(scenario) + ".csv"));
        const auto inputs = prepare_inputs(config);
        const auto log = run_simulation(emitted, inputs.irradiance, inputs.office_load,
                                        inputs.station_profile, scenario,
                                        simulation_config(config));
        const auto report = check_feasibility(log);
        expect(report.elf_load <= kElfLoadLimit,
               scenario_name(scenario) + " elf_load " + std::to_string(report.elf_load));
        expect(report.elf_station <= kElfStationLimit,
               scenario_name(scenario) + " elf_sta " + std::to_string(report.elf_station));
        expect(report.tank_end_minus_initial_kwh >= 0.0,
               scenario_name(scenario) + " tank deficit " +
                   std::to_string(report.tank_end_minus_initial_kwh));
    }
    fs::remove_all(dir);
    detail = "both scenarios' emitted optima re-simulated from the emitted sizing files";
    return checks_failed == failed_before;
}

// ---------------------------------------------------------------------------
// 7. Monotone convergence traces
// ---------------------------------------------------------------------------

bool criterion7(std::string& detail) {
    long traces = 0, points = 0;
    bool ok = true;
    for (const auto& trace : all_traces) {
        ++traces;
        for (std::size_t i = 1; i < trace.size(); ++i) {
            ++points;
            if (trace[i].best_penalized > trace[i - 1].best_penalized) ok = false;
        }
    }
    expect(ok, "a convergence trace increased");
    detail = std::to_string(traces) + " traces, " + std::to_string(points) + " steps checked";
    return ok;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {"equation oracles", criterion1},
        {"golden 24-hour trace", criterion2},
        {"property suite (1000 randomized year runs)", criterion3},
        {"brute-force equivalence (48 h grid vs swarm)", criterion4},
        {"directional two-scenario reproduction", criterion5},
        {"feasibility of emitted optima", criterion6},
        {"monotone convergence traces", criterion7},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        checks_run = 0;
        checks_failed = 0;
        first_failure.clear();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            ok = false;
            first_failure = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("criterion %zu [%s] %s — %s\n", i + 1, ok ? "PASS" : "FAIL",
                    criteria[i].name, ok ? detail.c_str() : first_failure.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
