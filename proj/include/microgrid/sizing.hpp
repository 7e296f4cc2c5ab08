#pragma once

namespace microgrid {

/// The six-dimensional decision vector the design search optimizes.
/// Counts are integral; power and mass ratings are continuous.
struct SystemSizing {
    int pv_count = 0;
    double electrolyzer_kw = 0.0;
    double tank_kg = 0.0;
    double fuel_cell_kw = 0.0;
    double converter_kw = 0.0;
    int evse_count = 0;
};

} // namespace microgrid
