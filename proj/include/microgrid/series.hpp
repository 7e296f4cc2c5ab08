#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace microgrid {

inline constexpr int kHoursPerYear = 8760;
inline constexpr int kHoursPerDay = 24;
inline constexpr double kMaxIrradianceWPerM2 = 1500.0; // sanity bound

enum class Quantity { IrradianceWPerM2, LoadKw, ChargingKw };

std::string quantity_name(Quantity q);

/// One physical quantity sampled once per hour. The canonical horizon is a
/// year (8760 samples); shorter whole-day horizons are allowed for tests and
/// toy runs.
struct HourlyTimeSeries {
    Quantity quantity = Quantity::LoadKw;
    std::vector<double> values;
    std::string year_label;

    int hours() const { return static_cast<int>(values.size()); }
    int days() const { return hours() / kHoursPerDay; }
};

/// Validated constructor: non-negative values, whole days, irradiance within
/// the sanity bound. Throws DomainError / LengthError.
HourlyTimeSeries make_series(Quantity quantity, std::vector<double> values,
                             std::string year_label = "");

/// Reads a one-column, header-less CSV of exactly 8760 numeric rows.
/// Throws LengthError on row count, ParseError (with row) on bad values.
HourlyTimeSeries load_series_csv(const std::filesystem::path& path, Quantity quantity);

/// Writes one value per row, full round-trip precision.
void write_series_csv(const HourlyTimeSeries& series, const std::filesystem::path& path);

/// Workday flags for `num_days` consecutive days: the first 5 days of each
/// 7-day block are workdays, then flags are trimmed or extended from the end
/// of the horizon until exactly `target_workdays` remain (capped by
/// `num_days`). A negative target keeps the raw 5-of-7 pattern.
std::vector<bool> workday_calendar(int num_days, int target_workdays = -1);

/// Formats a double with enough digits to round-trip exactly.
std::string format_full(double v);

} // namespace microgrid
