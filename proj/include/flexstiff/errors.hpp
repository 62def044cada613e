#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace flexstiff {

/// Invalid user input (bad parameter value, malformed config). CLI exit code 1.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string field, const std::string& message)
        : std::runtime_error(message), field_(std::move(field)) {}

    /// Name of the offending parameter or config key.
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Numerical failure (singular system, residual out of tolerance). CLI exit code 2.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& message) : std::runtime_error(message) {}
};

/// Compliance matrix too close to singular to invert (degenerate path).
class SingularCompliance : public NumericalError {
public:
    SingularCompliance(const std::string& message, std::array<double, 3> null_direction)
        : NumericalError(message), null_direction_(null_direction) {}

    /// Unit (x, y, phi) direction with (near-)zero compliance response.
    const std::array<double, 3>& null_direction() const { return null_direction_; }

private:
    std::array<double, 3> null_direction_;
};

}  // namespace flexstiff
