#pragma once

#include <stdexcept>
#include <string>

namespace equil {

// Two objects that must share a dimension (outcome count, Hilbert space
// dimension, phase-space dimension) do not.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An argument lies outside the set on which the operation is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Numeric data violates a type invariant (e.g. a probe returned a vector that
// is not a probability distribution).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Scenario configuration is malformed. `path()` is the JSON-pointer-like
// location of the offending field.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace equil
