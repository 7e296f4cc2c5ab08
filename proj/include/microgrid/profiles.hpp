#pragma once

#include <cstdint>
#include <vector>

#include "microgrid/series.hpp"

namespace microgrid {

/// PHEV fleet behaviour on a workday. Arrivals fall uniformly in
/// [arrival_start_hour, arrival_end_hour] (the window start defaults to the
/// interval origin 0), everyone departs at departure_hour, and each vehicle
/// charges at a constant rate until its requested energy is delivered.
struct PhevFleetConfig {
    int fleet_size = 50;
    double arrival_start_hour = 0.0;
    double arrival_end_hour = 10.0;  // T1
    int departure_hour = 17;         // T2, must be > T1
    double charge_rate_kw = 4.0;     // psi
    double demand_upper_kwh = 10.4;  // requested energy ~ U[0, upper]
    int workdays_per_year = 261;
    std::uint64_t rng_seed = 1;
};

struct PhevArrival {
    double arrival_hour = 0.0;   // hour of day, in [start, T1]
    double requested_kwh = 0.0;  // in [0, demand_upper]
};

/// Per-day arrival lists; empty on non-workdays.
struct DailyArrivalSchedule {
    std::vector<std::vector<PhevArrival>> days;

    int num_days() const { return static_cast<int>(days.size()); }
    long total_arrivals() const;
    /// Sum of requested energy over one day, kWh.
    double requested_kwh(int day) const;
};

void validate(const PhevFleetConfig& cfg);

/// Office demand: deterministic for a given seed, exact peak, weekday working
/// hours (08-18) at 60-100% of peak, nights and weekends at 10-35%.
HourlyTimeSeries synthesize_office_load(double peak_kw, std::uint64_t seed);

/// Clear-sky-with-haze irradiance for a low-latitude island site: seasonal
/// daylength and amplitude, mostly sunny with occasional attenuated days.
HourlyTimeSeries synthesize_irradiance(std::uint64_t seed, double peak_w_m2 = 950.0);

/// Draws one year of workday arrivals from the fleet configuration.
DailyArrivalSchedule synthesize_phev_fleet(const PhevFleetConfig& cfg, int num_days = 365);

/// Station demand when nobody manages charging: each vehicle charges at the
/// fleet rate from its arrival hour until served, first come first served
/// over `evse_count` plugs, nobody charges past the departure hour.
HourlyTimeSeries unmanaged_charging_profile(const DailyArrivalSchedule& schedule,
                                            const PhevFleetConfig& cfg, int evse_count);

} // namespace microgrid
