#include "microgrid/series.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>

#include "microgrid/errors.hpp"

namespace microgrid {

std::string quantity_name(Quantity q) {
    switch (q) {
    case Quantity::IrradianceWPerM2: return "irradiance_W_per_m2";
    case Quantity::LoadKw: return "load_kW";
    case Quantity::ChargingKw: return "charging_kW";
    }
    return "unknown";
}

HourlyTimeSeries make_series(Quantity quantity, std::vector<double> values,
                             std::string year_label) {
    if (values.empty() || values.size() % kHoursPerDay != 0)
        throw LengthError("series must cover whole days, got " +
                          std::to_string(values.size()) + " hours");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] >= 0.0))
            throw DomainError("negative or non-finite value at hour " + std::to_string(i));
        if (quantity == Quantity::IrradianceWPerM2 && values[i] > kMaxIrradianceWPerM2)
            throw DomainError("irradiance " + std::to_string(values[i]) +
                              " W/m2 at hour " + std::to_string(i) + " exceeds sanity bound");
    }
    HourlyTimeSeries s;
    s.quantity = quantity;
    s.values = std::move(values);
    s.year_label = std::move(year_label);
    return s;
}

namespace {

bool parse_double(const std::string& text, double& out) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(*begin))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(end[-1]))) --end;
    if (begin == end) return false;
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

} // namespace

HourlyTimeSeries load_series_csv(const std::filesystem::path& path, Quantity quantity) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open series file: " + path.string());

    std::vector<double> values;
    values.reserve(kHoursPerYear);
    std::string line;
    long row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && in.peek() == EOF) break; // tolerate one trailing newline
        double v = 0.0;
        if (!parse_double(line, v))
            throw ParseError("non-numeric value '" + line + "' in " + path.filename().string(), row);
        if (v < 0.0)
            throw ParseError("negative value in " + path.filename().string(), row);
        values.push_back(v);
    }
    if (values.size() != kHoursPerYear)
        throw LengthError(path.filename().string() + ": expected " +
                          std::to_string(kHoursPerYear) + " rows, got " +
                          std::to_string(values.size()));
    return make_series(quantity, std::move(values), path.stem().string());
}

void write_series_csv(const HourlyTimeSeries& series, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write series file: " + path.string());
    for (double v : series.values) out << format_full(v) << '\n';
}

std::vector<bool> workday_calendar(int num_days, int target_workdays) {
    std::vector<bool> flags(static_cast<std::size_t>(num_days));
    int count = 0;
    for (int d = 0; d < num_days; ++d) {
        flags[d] = (d % 7) < 5;
        if (flags[d]) ++count;
    }
    if (target_workdays < 0) return flags;
    // Adjust from the end of the horizon until the count matches.
    for (int d = num_days - 1; d >= 0 && count > target_workdays; --d) {
        if (flags[d]) { flags[d] = false; --count; }
    }
    for (int d = num_days - 1; d >= 0 && count < target_workdays; --d) {
        if (!flags[d]) { flags[d] = true; ++count; }
    }
    return flags;
}

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    // Prefer the shortest representation that still round-trips.
    for (int prec = 1; prec <= 16; ++prec) {
        char shorter[40];
        std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
        double back = 0.0;
        std::sscanf(shorter, "%lf", &back);
        if (back == v) return shorter;
    }
    return buf;
}

} // namespace microgrid
