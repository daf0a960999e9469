#pragma once

#include <stdexcept>
#include <string>

namespace hoops {

/// Bad input data: malformed CSV rows, invariant violations, unknown teams.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad configuration: out-of-range parameters, inconsistent specs.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hoops
