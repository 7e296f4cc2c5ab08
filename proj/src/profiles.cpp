#include "microgrid/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "microgrid/errors.hpp"
#include "microgrid/rng.hpp"

namespace microgrid {

long DailyArrivalSchedule::total_arrivals() const {
    long n = 0;
    for (const auto& day : days) n += static_cast<long>(day.size());
    return n;
}

double DailyArrivalSchedule::requested_kwh(int day) const {
    double total = 0.0;
    for (const auto& a : days[day]) total += a.requested_kwh;
    return total;
}

void validate(const PhevFleetConfig& cfg) {
    if (cfg.fleet_size < 0) throw DomainError("fleet_size must be >= 0");
    if (cfg.arrival_start_hour < 0.0 || cfg.arrival_start_hour > cfg.arrival_end_hour)
        throw DomainError("arrival window start must lie in [0, T1]");
    if (static_cast<double>(cfg.departure_hour) <= cfg.arrival_end_hour)
        throw DomainError("departure hour T2 must be later than arrival window end T1");
    if (cfg.departure_hour >= kHoursPerDay)
        throw DomainError("departure hour T2 must fall within the day");
    if (cfg.charge_rate_kw <= 0.0) throw DomainError("charge rate psi must be > 0");
    if (cfg.demand_upper_kwh <= 0.0) throw DomainError("demand upper bound must be > 0");
    if (cfg.workdays_per_year < 0) throw DomainError("workdays_per_year must be >= 0");
}

HourlyTimeSeries synthesize_office_load(double peak_kw, std::uint64_t seed) {
    if (peak_kw <= 0.0) throw DomainError("office peak must be > 0");

    std::mt19937_64 rng(seed);
    const auto weekday = workday_calendar(365);
    std::vector<double> values(kHoursPerYear);

    for (int day = 0; day < 365; ++day) {
        for (int hod = 0; hod < kHoursPerDay; ++hod) {
            const bool working = weekday[day] && hod >= 8 && hod < 18;
            double fraction;
            if (working) {
                // Mid-day hump over the working window, held inside [0.60, 0.99]
                // so the designated peak hour below stays the year's maximum.
                const double hump = std::sin(std::numbers::pi * (hod - 8) / 10.0);
                fraction = 0.62 + 0.31 * hump + uniform_in(rng, -0.02, 0.04);
                fraction = std::clamp(fraction, 0.60, 0.99);
            } else {
                // Base loads: HVAC standby, servers, security lighting.
                const double hump = std::sin(std::numbers::pi * (hod + 1) / 25.0);
                fraction = 0.105 + 0.06 * hump + uniform_in(rng, -0.005, 0.045);
                fraction = std::clamp(fraction, 0.10, 0.35);
            }
            values[day * kHoursPerDay + hod] = fraction * peak_kw;
        }
    }
    // Pin the annual peak exactly: noon of the second day (a weekday).
    values[1 * kHoursPerDay + 12] = peak_kw;
    return make_series(Quantity::LoadKw, std::move(values), "synthetic-office");
}

HourlyTimeSeries synthesize_irradiance(std::uint64_t seed, double peak_w_m2) {
    if (peak_w_m2 <= 0.0 || peak_w_m2 > kMaxIrradianceWPerM2)
        throw DomainError("irradiance peak must lie in (0, 1500] W/m2");

    std::mt19937_64 rng(seed);
    std::vector<double> values(kHoursPerYear, 0.0);

    for (int day = 0; day < 365; ++day) {
        // Season ranges 0 (winter solstice) to 1 (summer solstice).
        const double season =
            0.5 + 0.5 * std::cos(2.0 * std::numbers::pi * (day - 172) / 365.0);
        const double half_width_h = 5.5 + 1.3 * season;    // daylength 11.0..13.6 h
        const double amplitude = peak_w_m2 * (0.80 + 0.20 * season);

        // A persistently sunny island sky; hazy or overcast days are rare.
        const double u = uniform01(rng);
        double clearness;
        if (u < 0.80) clearness = uniform_in(rng, 0.95, 1.0);
        else if (u < 0.95) clearness = uniform_in(rng, 0.80, 0.95);
        else clearness = uniform_in(rng, 0.50, 0.80);

        const double sunrise = 12.0 - half_width_h;
        for (int hod = 0; hod < kHoursPerDay; ++hod) {
            const double x = (hod + 0.5 - sunrise) / (2.0 * half_width_h);
            if (x <= 0.0 || x >= 1.0) continue;
            const double elevation = std::sin(std::numbers::pi * x);
            const double jitter = uniform_in(rng, 0.97, 1.0);
            values[day * kHoursPerDay + hod] =
                std::min(amplitude * clearness * elevation * jitter, kMaxIrradianceWPerM2);
        }
    }
    return make_series(Quantity::IrradianceWPerM2, std::move(values), "synthetic-island");
}

DailyArrivalSchedule synthesize_phev_fleet(const PhevFleetConfig& cfg, int num_days) {
    validate(cfg);
    std::mt19937_64 rng(cfg.rng_seed);
    // The yearly workday count only constrains full-year horizons; toy
    // horizons keep the plain 5-of-7 pattern (as the simulator does).
    const auto workdays =
        workday_calendar(num_days, num_days == 365 ? cfg.workdays_per_year : -1);

    DailyArrivalSchedule schedule;
    schedule.days.resize(static_cast<std::size_t>(num_days));
    for (int day = 0; day < num_days; ++day) {
        if (!workdays[day]) continue;
        auto& arrivals = schedule.days[day];
        arrivals.reserve(static_cast<std::size_t>(cfg.fleet_size));
        for (int v = 0; v < cfg.fleet_size; ++v) {
            PhevArrival a;
            a.arrival_hour = uniform_in(rng, cfg.arrival_start_hour, cfg.arrival_end_hour);
            a.requested_kwh = uniform_in(rng, 0.0, cfg.demand_upper_kwh);
            arrivals.push_back(a);
        }
        std::stable_sort(arrivals.begin(), arrivals.end(),
                         [](const PhevArrival& a, const PhevArrival& b) {
                             return a.arrival_hour < b.arrival_hour;
                         });
    }
    return schedule;
}

HourlyTimeSeries unmanaged_charging_profile(const DailyArrivalSchedule& schedule,
                                            const PhevFleetConfig& cfg, int evse_count) {
    validate(cfg);
    if (evse_count < 1) throw DomainError("station needs at least one EVSE");

    const int num_days = schedule.num_days();
    std::vector<double> values(static_cast<std::size_t>(num_days) * kHoursPerDay, 0.0);
    std::vector<double> remaining;

    for (int day = 0; day < num_days; ++day) {
        const auto& arrivals = schedule.days[day];
        if (arrivals.empty()) continue;
        remaining.assign(arrivals.size(), 0.0);
        for (std::size_t i = 0; i < arrivals.size(); ++i) remaining[i] = arrivals[i].requested_kwh;

        // Departure is the end of hour T2; nobody draws power after that.
        for (int hod = 0; hod <= cfg.departure_hour; ++hod) {
            int plugs_in_use = 0;
            double station_kw = 0.0;
            for (std::size_t i = 0; i < arrivals.size() && plugs_in_use < evse_count; ++i) {
                if (remaining[i] <= 1e-12) continue;
                if (static_cast<int>(std::floor(arrivals[i].arrival_hour)) > hod) continue;
                const double draw_kw = std::min(cfg.charge_rate_kw, remaining[i]);
                remaining[i] -= draw_kw;
                station_kw += draw_kw;
                ++plugs_in_use;
            }
            values[static_cast<std::size_t>(day) * kHoursPerDay + hod] = station_kw;
        }
    }
    return make_series(Quantity::ChargingKw, std::move(values), "unmanaged-station");
}

} // namespace microgrid
