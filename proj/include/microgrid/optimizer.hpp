#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "microgrid/agents.hpp"
#include "microgrid/economics.hpp"
#include "microgrid/reliability.hpp"

namespace microgrid {

inline constexpr int kSizingDims = 6;

/// Per-dimension search interval.
struct Bounds {
    double lo = 0.0;
    double hi = 0.0;
};

/// Swarm hyperparameters. Nothing here comes from published values; all of
/// it is configurable.
struct PsoConfig {
    int swarm_size = 50;
    int max_iterations = 100;
    double inertia = 0.7;
    double cognitive = 1.5;
    double social = 1.5;
    double velocity_clamp = 0.2; // fraction of each bound range
    double penalty_weight = 1e7; // dollars per unit of normalized violation
    std::array<Bounds, kSizingDims> bounds{
        Bounds{0.0, 1000.0}, // PV count
        Bounds{0.0, 200.0},  // electrolyzer kW
        Bounds{0.0, 200.0},  // tank kg
        Bounds{0.0, 200.0},  // fuel cell kW
        Bounds{0.0, 200.0},  // converter kW
        Bounds{0.0, 100.0},  // EVSE count
    };
    std::uint64_t rng_seed = 1;
};

/// Everything a fitness evaluation needs besides the candidate itself.
struct EvaluationContext {
    const HourlyTimeSeries* irradiance = nullptr;
    const HourlyTimeSeries* office_load = nullptr;
    const HourlyTimeSeries* station_profile = nullptr;
    const ComponentCatalog* catalog = nullptr;
    Scenario scenario = Scenario::FixedCharging;
    SimulationConfig sim{};
    double penalty_weight = 1e7; // overwritten from PsoConfig inside pso_optimize
};

struct CandidateEvaluation {
    SystemSizing sizing;
    double penalized_cost = 0.0;
    double raw_npc = 0.0;
    ConstraintReport report;
};

/// Rounds the integer dimensions, simulates the year, and prices the result.
/// Infeasible candidates pay the penalty weight per normalized violation
/// (ELF violations relative to their limits, tank deficit relative to
/// capacity), so feasible candidates always have penalized == raw.
CandidateEvaluation evaluate_candidate(const std::array<double, kSizingDims>& position,
                                       const EvaluationContext& context);

SystemSizing sizing_from_position(const std::array<double, kSizingDims>& position);

struct IterationTrace {
    int iteration = 0;
    double best_penalized = 0.0;
    double best_feasible = 0.0; // NaN until a feasible candidate has been seen
};

struct OptimizationResult {
    SystemSizing best_sizing;
    double best_cost = 0.0; // raw NPC if feasible_found, else best penalized cost
    ConstraintReport report;
    bool feasible_found = false;
    std::vector<IterationTrace> convergence;
    long evaluations = 0;
};

/// Canonical global-best PSO with velocity clamping and bound clamping.
/// Deterministic for a fixed seed. The incumbent is feasibility-first: once
/// a feasible candidate is seen, no infeasible one can displace it.
OptimizationResult pso_optimize(const PsoConfig& config, const EvaluationContext& context);

} // namespace microgrid
