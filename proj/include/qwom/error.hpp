#pragma once

#include <stdexcept>
#include <string>

namespace qwom {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid scenario: bad key, bad value, or cross-field violation.
struct ScenarioError : Error {
    explicit ScenarioError(const std::string& msg) : Error(msg) {}
};

/// Integration failure (non-finite state, step-size underflow).
struct IntegrationError : Error {
    IntegrationError(const std::string& msg, double t_fail)
        : Error(msg + " at t=" + std::to_string(t_fail)), t(t_fail) {}
    double t;
};

/// Physically impossible value (negative occupation beyond roundoff).
struct PhysicalityError : Error {
    explicit PhysicalityError(const std::string& msg) : Error(msg) {}
};

/// Series analysis cannot proceed (too few samples or extrema).
struct AnalysisError : Error {
    explicit AnalysisError(const std::string& msg) : Error(msg) {}
};

/// File input/output failure; message carries the path.
struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace qwom
