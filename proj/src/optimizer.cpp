#include "microgrid/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "microgrid/errors.hpp"
#include "microgrid/rng.hpp"

namespace microgrid {

SystemSizing sizing_from_position(const std::array<double, kSizingDims>& x) {
    SystemSizing s;
    s.pv_count = static_cast<int>(std::lround(x[0]));
    s.electrolyzer_kw = x[1];
    s.tank_kg = x[2];
    s.fuel_cell_kw = x[3];
    s.converter_kw = x[4];
    s.evse_count = static_cast<int>(std::lround(x[5]));
    return s;
}

CandidateEvaluation evaluate_candidate(const std::array<double, kSizingDims>& position,
                                       const EvaluationContext& ctx) {
    if (!ctx.irradiance || !ctx.office_load || !ctx.station_profile || !ctx.catalog)
        throw ContractError("evaluation context is missing inputs");

    CandidateEvaluation eval;
    eval.sizing = sizing_from_position(position);

    const SimulationLog log = run_simulation(eval.sizing, *ctx.irradiance, *ctx.office_load,
                                             *ctx.station_profile, ctx.scenario, ctx.sim);
    eval.report = check_feasibility(log);
    eval.raw_npc = total_npc(eval.sizing, *ctx.catalog);

    // Normalize each violation by its own scale so one weight covers all
    // three constraints.
    const double capacity_kwh = eval.sizing.tank_kg * ctx.sim.hhv_kwh_per_kg;
    const double tank_norm =
        capacity_kwh > 0.0 ? eval.report.tank_violation_kwh / capacity_kwh : 0.0;
    const double violation = eval.report.elf_load_violation / kElfLoadLimit +
                             eval.report.elf_station_violation / kElfStationLimit + tank_norm;
    eval.penalized_cost = eval.raw_npc + ctx.penalty_weight * violation;
    return eval;
}

OptimizationResult pso_optimize(const PsoConfig& cfg, const EvaluationContext& context) {
    if (cfg.swarm_size < 2) throw DomainError("swarm size must be >= 2");
    if (cfg.max_iterations < 1) throw DomainError("need at least one iteration");
    for (const auto& b : cfg.bounds)
        if (b.lo > b.hi) throw DomainError("bounds must satisfy lo <= hi");

    EvaluationContext ctx = context;
    ctx.penalty_weight = cfg.penalty_weight;

    std::mt19937_64 rng(cfg.rng_seed);
    const int n = cfg.swarm_size;

    std::vector<std::array<double, kSizingDims>> position(n), velocity(n), pbest_pos(n);
    std::vector<double> pbest_cost(n, std::numeric_limits<double>::infinity());

    std::array<double, kSizingDims> vmax{};
    for (int d = 0; d < kSizingDims; ++d)
        vmax[d] = cfg.velocity_clamp * (cfg.bounds[d].hi - cfg.bounds[d].lo);

    for (int i = 0; i < n; ++i) {
        for (int d = 0; d < kSizingDims; ++d) {
            position[i][d] = uniform_in(rng, cfg.bounds[d].lo, cfg.bounds[d].hi);
            velocity[i][d] = 0.0;
        }
        pbest_pos[i] = position[i];
    }

    OptimizationResult result;
    result.convergence.reserve(static_cast<std::size_t>(cfg.max_iterations));

    std::array<double, kSizingDims> gbest_pos = position[0];
    double gbest_cost = std::numeric_limits<double>::infinity();
    CandidateEvaluation best_feasible;
    double best_feasible_cost = std::numeric_limits<double>::infinity();
    CandidateEvaluation best_any;
    double best_any_cost = std::numeric_limits<double>::infinity();

    for (int iter = 0; iter < cfg.max_iterations; ++iter) {
        // Evaluations are independent; the reduction below runs in particle
        // order so any parallel execution would give identical results.
        for (int i = 0; i < n; ++i) {
            const CandidateEvaluation eval = evaluate_candidate(position[i], ctx);
            ++result.evaluations;

            if (eval.penalized_cost < pbest_cost[i]) {
                pbest_cost[i] = eval.penalized_cost;
                pbest_pos[i] = position[i];
            }
            if (eval.penalized_cost < gbest_cost) {
                gbest_cost = eval.penalized_cost;
                gbest_pos = position[i];
            }
            if (eval.penalized_cost < best_any_cost) {
                best_any_cost = eval.penalized_cost;
                best_any = eval;
            }
            if (eval.report.feasible && eval.raw_npc < best_feasible_cost) {
                best_feasible_cost = eval.raw_npc;
                best_feasible = eval;
            }
        }

        IterationTrace trace;
        trace.iteration = iter;
        trace.best_penalized = gbest_cost;
        trace.best_feasible = best_feasible_cost < std::numeric_limits<double>::infinity()
                                  ? best_feasible_cost
                                  : std::numeric_limits<double>::quiet_NaN();
        result.convergence.push_back(trace);

        if (iter + 1 == cfg.max_iterations) break;

        for (int i = 0; i < n; ++i) {
            for (int d = 0; d < kSizingDims; ++d) {
                const double r1 = uniform01(rng);
                const double r2 = uniform01(rng);
                double v = cfg.inertia * velocity[i][d] +
                           cfg.cognitive * r1 * (pbest_pos[i][d] - position[i][d]) +
                           cfg.social * r2 * (gbest_pos[d] - position[i][d]);
                v = std::clamp(v, -vmax[d], vmax[d]);
                velocity[i][d] = v;
                position[i][d] =
                    std::clamp(position[i][d] + v, cfg.bounds[d].lo, cfg.bounds[d].hi);
            }
        }
    }

    result.feasible_found = best_feasible_cost < std::numeric_limits<double>::infinity();
    const CandidateEvaluation& chosen = result.feasible_found ? best_feasible : best_any;
    result.best_sizing = chosen.sizing;
    result.best_cost = result.feasible_found ? chosen.raw_npc : chosen.penalized_cost;
    result.report = chosen.report;
    return result;
}

} // namespace microgrid
