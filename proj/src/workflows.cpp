#include "microgrid/workflows.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "microgrid/errors.hpp"
#include "microgrid/io.hpp"

namespace microgrid {

namespace {

namespace fs = std::filesystem;

void write_input_profiles(const PreparedInputs& in, const fs::path& dir) {
    write_series_csv(in.irradiance, dir / "irradiance.csv");
    write_series_csv(in.office_load, dir / "office_load.csv");
    write_series_csv(in.station_profile, dir / "station_unmanaged.csv");
}

double total_dump_kwh(const SimulationLog& log) {
    double total = 0.0;
    for (const auto& h : log.hours) total += h.dump_kw;
    return total;
}

std::string money(double usd) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", usd);
    return buf;
}

std::string sizing_table(const SystemSizing& s) {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "PV\tElectrolyzer (kW)\tHydrogen tank (kg)\tFuel cell (kW)\t"
                  "DC/AC converter (kW)\tEVSE\n%d\t%.2f\t%.2f\t%.2f\t%.2f\t%d\n",
                  s.pv_count, s.electrolyzer_kw, s.tank_kg, s.fuel_cell_kw, s.converter_kw,
                  s.evse_count);
    return buf;
}

std::string constraint_lines(const ConstraintReport& r) {
    std::string text;
    text += "ELF_load            = " + format_full(r.elf_load) + "\n";
    text += "ELF_sta             = " + format_full(r.elf_station) + "\n";
    text += "tank end - initial  = " + format_full(r.tank_end_minus_initial_kwh) + " kWh\n";
    text += std::string("constraints         = ") + (r.feasible ? "satisfied" : "violated") + "\n";
    return text;
}

} // namespace

int cmd_simulate(const RunConfig& config) {
    const PreparedInputs inputs = prepare_inputs(config);
    const SimulationConfig sim = simulation_config(config);

    const SimulationLog log = run_simulation(config.sizing, inputs.irradiance,
                                             inputs.office_load, inputs.station_profile,
                                             config.scenario, sim);
    const ConstraintReport report = check_feasibility(log);
    const double npc = total_npc(config.sizing, config.catalog);

    fs::create_directories(config.output_dir);
    write_input_profiles(inputs, config.output_dir);
    write_log_csv(log, config.output_dir / "simulation_log.csv");
    write_departures_csv(log, config.output_dir / "departures.csv");

    std::string summary;
    summary += "scenario            = " + scenario_name(config.scenario) + "\n";
    summary += sizing_table(config.sizing);
    summary += "total NPC           = $" + money(npc) + "\n";
    summary += constraint_lines(report);
    summary += "dump energy         = " + format_full(total_dump_kwh(log)) + " kWh\n";

    std::ofstream(config.output_dir / "summary.txt") << summary;
    std::cout << summary;
    return 0;
}

OptimizeOutcome run_optimization(const RunConfig& config, Scenario scenario) {
    OptimizeOutcome outcome{.result = {}, .inputs = prepare_inputs(config)};

    EvaluationContext ctx;
    ctx.irradiance = &outcome.inputs.irradiance;
    ctx.office_load = &outcome.inputs.office_load;
    ctx.station_profile = &outcome.inputs.station_profile;
    ctx.catalog = &config.catalog;
    ctx.scenario = scenario;
    ctx.sim = simulation_config(config);

    outcome.result = pso_optimize(config.pso, ctx);
    return outcome;
}

namespace {

std::string optimize_report(const OptimizationResult& r, Scenario scenario) {
    std::string text;
    text += "scenario            = " + scenario_name(scenario) + "\n";
    text += sizing_table(r.best_sizing);
    text += "total NPC           = $" + money(r.best_cost) + "\n";
    text += std::string("verdict             = ") +
            (r.feasible_found ? "feasible" : "infeasible") + "\n";
    text += constraint_lines(r.report);
    text += "evaluations         = " + std::to_string(r.evaluations) + "\n";
    return text;
}

} // namespace

int cmd_optimize(const RunConfig& config) {
    const OptimizeOutcome outcome = run_optimization(config, config.scenario);
    const OptimizationResult& result = outcome.result;

    fs::create_directories(config.output_dir);
    write_input_profiles(outcome.inputs, config.output_dir);
    const std::string tag = scenario_name(config.scenario);
    write_convergence_csv(result, config.output_dir / ("convergence_" + tag + ".csv"));
    write_sizing_csv(result.best_sizing, config.output_dir / ("best_sizing_" + tag + ".csv"));

    std::string summary = optimize_report(result, config.scenario);
    std::ofstream(config.output_dir / ("optimize_" + tag + ".txt")) << summary;
    std::cout << summary;
    if (!result.feasible_found)
        std::cout << "warning: no candidate satisfied all constraints; "
                     "reporting the best penalized sizing\n";
    return 0;
}

int cmd_compare(const RunConfig& config) {
    // One synthesis serves both scenarios: same profiles, same swarm seed.
    const OptimizeOutcome fixed = run_optimization(config, Scenario::FixedCharging);
    const OptimizeOutcome deferrable = run_optimization(config, Scenario::DeferrableCharging);

    fs::create_directories(config.output_dir);
    write_input_profiles(fixed.inputs, config.output_dir);
    write_convergence_csv(fixed.result, config.output_dir / "convergence_fixed.csv");
    write_convergence_csv(deferrable.result, config.output_dir / "convergence_deferrable.csv");
    write_sizing_csv(fixed.result.best_sizing, config.output_dir / "best_sizing_fixed.csv");
    write_sizing_csv(deferrable.result.best_sizing,
                     config.output_dir / "best_sizing_deferrable.csv");

    std::string text;
    text += "=== scenario 1: fixed charging ===\n";
    text += optimize_report(fixed.result, Scenario::FixedCharging);
    text += "\n=== scenario 2: deferrable charging ===\n";
    text += optimize_report(deferrable.result, Scenario::DeferrableCharging);
    text += "\n=== comparison ===\n";
    const double delta = fixed.result.best_cost - deferrable.result.best_cost;
    text += "cost delta (fixed - deferrable) = $" + money(delta) + "\n";
    text += "pv delta                        = " +
            std::to_string(deferrable.result.best_sizing.pv_count -
                           fixed.result.best_sizing.pv_count) + "\n";
    text += "evse delta                      = " +
            std::to_string(deferrable.result.best_sizing.evse_count -
                           fixed.result.best_sizing.evse_count) + "\n";

    std::ofstream(config.output_dir / "compare.txt") << text;
    std::cout << text;
    return 0;
}

} // namespace microgrid
