#pragma once

#include <stdexcept>
#include <string>

namespace fedecg {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct LabelError : Error { using Error::Error; };
struct CapabilityError : Error { using Error::Error; };
struct ArgumentError : Error { using Error::Error; };
struct StateError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct NonConvergenceError : Error { using Error::Error; };

}  // namespace fedecg
