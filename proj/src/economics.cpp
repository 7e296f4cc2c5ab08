#include "microgrid/economics.hpp"

#include <cmath>

#include "microgrid/errors.hpp"

namespace microgrid {

ComponentCatalog ComponentCatalog::defaults() {
    ComponentCatalog c;
    c.pv = {"pv", CostBasis::PerCount, 2000.0, 1800.0, 0.0, 20.0, 0.154};
    c.electrolyzer = {"electrolyzer", CostBasis::PerKw, 1500.0, 1000.0, 15.0, 20.0, 0.75};
    c.tank = {"hydrogen_tank", CostBasis::PerKg, 500.0, 450.0, 5.0, 20.0, 0.95};
    c.fuel_cell = {"fuel_cell", CostBasis::PerKw, 2000.0, 1500.0, 100.0, 5.0, 0.50};
    c.converter = {"converter", CostBasis::PerKw, 700.0, 650.0, 7.0, 15.0, 0.90};
    c.evse = {"evse", CostBasis::PerCount, 2000.0, 1800.0, 20.0, 20.0, 0.90};
    c.interest_rate = 0.06;
    c.project_years = 20.0;
    return c;
}

double single_payment_present_worth(double lifetime_yr, double interest_rate,
                                    double project_years) {
    if (lifetime_yr <= 0.0) throw DomainError("component lifetime must be > 0");
    if (project_years <= 0.0) throw DomainError("project horizon must be > 0");
    double k = 0.0;
    for (double year = lifetime_yr; year < project_years; year += lifetime_yr)
        k += std::pow(1.0 + interest_rate, -year);
    return k;
}

double present_worth_annuity(double interest_rate, double project_years) {
    if (project_years <= 0.0) throw DomainError("project horizon must be > 0");
    if (interest_rate == 0.0) return project_years;
    return (1.0 - std::pow(1.0 + interest_rate, -project_years)) / interest_rate;
}

double component_npc(const ComponentSpec& spec, double size, double interest_rate,
                     double project_years) {
    if (size < 0.0) throw DomainError("component size must be >= 0");
    const double k = single_payment_present_worth(spec.lifetime_yr, interest_rate, project_years);
    const double pwa = present_worth_annuity(interest_rate, project_years);
    return size * (spec.capital_usd + spec.replacement_usd * k +
                   spec.maintenance_usd_per_yr * pwa);
}

double total_npc(const SystemSizing& sizing, const ComponentCatalog& catalog) {
    const double ir = catalog.interest_rate;
    const double r = catalog.project_years;
    return component_npc(catalog.pv, sizing.pv_count, ir, r) +
           component_npc(catalog.electrolyzer, sizing.electrolyzer_kw, ir, r) +
           component_npc(catalog.tank, sizing.tank_kg, ir, r) +
           component_npc(catalog.fuel_cell, sizing.fuel_cell_kw, ir, r) +
           component_npc(catalog.converter, sizing.converter_kw, ir, r) +
           component_npc(catalog.evse, sizing.evse_count, ir, r);
}

} // namespace microgrid
