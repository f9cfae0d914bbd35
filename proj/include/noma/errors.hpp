#pragma once

#include <stdexcept>
#include <string>

namespace noma {

/// A parameter violates its domain. `key()` names the offending field.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string key, const std::string& reason)
        : std::invalid_argument(key + ": " + reason), key_(std::move(key))
    {
    }

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/// Quadrature failed to reach the requested tolerance.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace noma
