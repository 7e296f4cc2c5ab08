#pragma once

#include <stdexcept>
#include <string>

namespace microgrid {

/// Input value outside the physical or configured domain.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Series or record count differs from what the caller promised.
class LengthError : public std::runtime_error {
public:
    explicit LengthError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed text input; carries the 1-based row that failed.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, long row)
        : std::runtime_error(what + " (row " + std::to_string(row) + ")"), row_(row) {}
    long row() const { return row_; }

private:
    long row_;
};

/// A caller broke an inter-module contract (not a user-input problem).
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

/// Bad or missing configuration; carries the offending field name.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& field, const std::string& what)
        : std::runtime_error("config field '" + field + "': " + what), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

} // namespace microgrid
