#pragma once

namespace microgrid {

/// PV generator parameters: output is efficiency x count x module area x
/// irradiance, converted to kW. One array is rated at 1 kW for costing.
struct PvParams {
    double generator_efficiency = 0.154; // instantaneous, held constant
    double module_area_m2 = 1.9;
    double rated_unit_kw = 1.0;
};

/// Ratings and efficiencies of the dispatchable devices. Ratings come from a
/// SystemSizing; efficiencies default to the study values.
struct DeviceRatings {
    double electrolyzer_kw = 0.0;
    double fuel_cell_kw = 0.0; // electrical OUTPUT rating (max draw = rating / efficiency)
    double converter_kw = 0.0;
    double electrolyzer_efficiency = 0.75;
    double fuel_cell_efficiency = 0.50;
    double converter_efficiency = 0.90;
    double station_efficiency = 0.90;
};

/// Hydrogen tank contents in kWh plus the fixed parameters that define its
/// usable window. Mass = energy / HHV; 5% of capacity is unextractable.
struct TankState {
    double energy_kwh = 0.0;
    double rated_mass_kg = 0.0;
    double hhv_kwh_per_kg = 39.7;
    double floor_fraction = 0.05;
    double storage_efficiency = 0.95;

    double capacity_kwh() const { return rated_mass_kg * hhv_kwh_per_kg; }
    double floor_kwh() const { return floor_fraction * capacity_kwh(); }
    double mass_kg() const { return hhv_kwh_per_kg > 0.0 ? energy_kwh / hhv_kwh_per_kg : 0.0; }
};

struct TankBounds {
    double floor_kwh = 0.0;
    double capacity_kwh = 0.0;
};

/// One tank update step. `overflow_kwh` is charge energy rejected at the
/// capacity clamp; `shortfall_kwh` is discharge energy the clamp refused at
/// the floor. At most one of them is nonzero.
struct TankStepResult {
    TankState state;
    double overflow_kwh = 0.0;
    double shortfall_kwh = 0.0;
};

/// PV array output in kW for `pv_count` modules under irradiance g_w_m2.
double pv_output_kw(const PvParams& params, double pv_count, double g_w_m2);

/// Electric output of the fuel cell for a given tank-side draw.
double fuel_cell_output_kw(double tank_draw_kw, const DeviceRatings& ratings);

/// Hydrogen-side output of the electrolyzer for a given PV-side input.
/// The input must already be clipped to the rating (dispatch does that);
/// exceeding it is a contract violation, not a physics event.
double electrolyzer_output_kw(double pv_input_kw, const DeviceRatings& ratings);

/// Usable window of a tank of the given rated mass.
TankBounds tank_bounds(double rated_mass_kg, double hhv_kwh_per_kg = 39.7,
                       double floor_fraction = 0.05);

/// Advances the tank by one step: energy' = energy + charge*dt -
/// discharge*eta_storage*dt, clamped to [floor, capacity]. Charging and
/// discharging in the same step is a contract violation.
TankStepResult tank_step(const TankState& state, double charge_kw, double discharge_kw,
                         double dt_h);

} // namespace microgrid
