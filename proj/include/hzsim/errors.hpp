#pragma once

#include <stdexcept>
#include <string>

namespace hzsim {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid configuration values, unknown keys, unknown protocol ids.
struct ConfigError : Error {
    using Error::Error;
};

// File system failures (unwritable path, unreadable file).
struct IoError : Error {
    using Error::Error;
};

struct NonPositiveField : ConfigError {
    using ConfigError::ConfigError;
};

struct BadEta : ConfigError {
    using ConfigError::ConfigError;
};

// Point lies in a square corner outside the outermost corona.
struct OutOfZone : Error {
    using Error::Error;
};

struct NegativeInput : Error {
    using Error::Error;
};

} // namespace hzsim
