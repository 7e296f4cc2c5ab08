#pragma once

#include <string>

#include "microgrid/sizing.hpp"

namespace microgrid {

enum class CostBasis { PerCount, PerKw, PerKg };

/// Cost and lifetime data for one component class. Costs are per unit of the
/// sizing dimension (per array, per kW, per kg).
struct ComponentSpec {
    std::string name;
    CostBasis unit = CostBasis::PerKw;
    double capital_usd = 0.0;
    double replacement_usd = 0.0;
    double maintenance_usd_per_yr = 0.0;
    double lifetime_yr = 20.0;
    double efficiency = 1.0;
};

/// Full catalog for the six sized components plus the discounting context.
struct ComponentCatalog {
    ComponentSpec pv;
    ComponentSpec electrolyzer;
    ComponentSpec tank;
    ComponentSpec fuel_cell;
    ComponentSpec converter;
    ComponentSpec evse;
    double interest_rate = 0.06;
    double project_years = 20.0;

    /// The study's published cost table.
    static ComponentCatalog defaults();
};

/// Sum of discount factors for replacements at n*lifetime, n = 1, 2, ...,
/// strictly inside the project horizon (a replacement at exactly year R would
/// never be used and is excluded).
double single_payment_present_worth(double lifetime_yr, double interest_rate,
                                    double project_years);

/// Present value of a $1/yr payment over the project horizon:
/// (1 - (1+ir)^-R) / ir, with the undiscounted limit R at ir = 0.
double present_worth_annuity(double interest_rate, double project_years);

/// Net present cost of `size` units of one component:
/// size x (capital + replacement*K + maintenance*PWA).
double component_npc(const ComponentSpec& spec, double size, double interest_rate,
                     double project_years);

/// Objective value: the six component NPCs summed.
double total_npc(const SystemSizing& sizing, const ComponentCatalog& catalog);

} // namespace microgrid
