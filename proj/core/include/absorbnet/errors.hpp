#pragma once

#include <stdexcept>
#include <string>

namespace absorbnet {

/// Malformed textual input (dates, codes, CSV cells).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid configuration value (rho <= 0, v_max < 1, bad mixtures, ...).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Shape mismatch between containers that must agree (node lists, region sets).
class StructuralError : public std::runtime_error {
public:
    explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A metric or aggregate has no defined value for this input.
class UndefinedMetricError : public std::runtime_error {
public:
    explicit UndefinedMetricError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Perturbation cannot reach the requested target.
class PerturbationError : public std::runtime_error {
public:
    explicit PerturbationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// File system / format failures, carrying path context.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace absorbnet
