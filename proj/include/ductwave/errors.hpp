#pragma once

#include <stdexcept>
#include <string>

namespace ductwave {

/// A physical or configuration parameter is outside its admissible domain.
/// Carries the name of the offending field.
class ParameterDomainError : public std::invalid_argument {
public:
    ParameterDomainError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// The time integration produced a non-finite value or violated a stability
/// bound. Carries the simulation time at which the failure was detected.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& message, double t)
        : std::runtime_error(message + " (at t=" + std::to_string(t) + ")"), t_(t) {}

    double time() const noexcept { return t_; }

private:
    double t_;
};

/// Config file could not be parsed; carries the 1-based line number.
class ConfigParseError : public std::runtime_error {
public:
    ConfigParseError(const std::string& message, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace ductwave
