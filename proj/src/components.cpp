#include "microgrid/components.hpp"

#include <algorithm>
#include <string>

#include "microgrid/errors.hpp"

namespace microgrid {

double pv_output_kw(const PvParams& params, double pv_count, double g_w_m2) {
    if (pv_count < 0.0) throw DomainError("pv_count must be >= 0");
    if (g_w_m2 < 0.0) throw DomainError("irradiance must be >= 0");
    return params.generator_efficiency * pv_count * params.module_area_m2 * g_w_m2 / 1000.0;
}

double fuel_cell_output_kw(double tank_draw_kw, const DeviceRatings& ratings) {
    if (tank_draw_kw < 0.0) throw DomainError("fuel cell draw must be >= 0");
    return tank_draw_kw * ratings.fuel_cell_efficiency;
}

double electrolyzer_output_kw(double pv_input_kw, const DeviceRatings& ratings) {
    if (pv_input_kw < 0.0) throw DomainError("electrolyzer input must be >= 0");
    if (pv_input_kw > ratings.electrolyzer_kw * (1.0 + 1e-12) + 1e-9)
        throw ContractError("electrolyzer input " + std::to_string(pv_input_kw) +
                            " kW exceeds rating " + std::to_string(ratings.electrolyzer_kw) +
                            " kW; clip surplus before conversion");
    return pv_input_kw * ratings.electrolyzer_efficiency;
}

TankBounds tank_bounds(double rated_mass_kg, double hhv_kwh_per_kg, double floor_fraction) {
    if (rated_mass_kg < 0.0) throw DomainError("tank mass must be >= 0");
    const double capacity = rated_mass_kg * hhv_kwh_per_kg;
    return {floor_fraction * capacity, capacity};
}

TankStepResult tank_step(const TankState& state, double charge_kw, double discharge_kw,
                         double dt_h) {
    if (charge_kw < 0.0 || discharge_kw < 0.0)
        throw DomainError("tank flows must be >= 0");
    if (charge_kw > 0.0 && discharge_kw > 0.0)
        throw ContractError("tank cannot charge and discharge in the same hour");

    const double raw = state.energy_kwh + charge_kw * dt_h -
                       discharge_kw * state.storage_efficiency * dt_h;
    const double floor = state.floor_kwh();
    const double capacity = state.capacity_kwh();

    TankStepResult result;
    result.state = state;
    result.state.energy_kwh = std::clamp(raw, floor, capacity);
    if (raw > capacity) result.overflow_kwh = raw - capacity;
    if (raw < floor) result.shortfall_kwh = floor - raw;
    return result;
}

} // namespace microgrid
