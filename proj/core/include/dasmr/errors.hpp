#pragma once

#include <stdexcept>
#include <string>

namespace dasmr {

/// Raised when robot, environment or reward parameters violate their invariants.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an API is driven out of order, e.g. stepping a finished episode.
class UsageError : public std::logic_error {
public:
    explicit UsageError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace dasmr
