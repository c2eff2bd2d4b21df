#pragma once

#include <stdexcept>
#include <string>

namespace cyl {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid argument or broken type invariant (bad grid size, non-real a(t), ...).
struct ValidationError : Error {
    using Error::Error;
};

/// File reading/writing failures.
struct IoError : Error {
    using Error::Error;
};

/// Wrong spectrum kind fed to a transform or file with a mismatched kind byte.
struct FormatError : Error {
    using Error::Error;
};

/// Internal cross-check failed: an exact verdict and a numeric scan disagree.
/// This is a bug trap, not a user error.
struct InconsistencyAlarm : Error {
    using Error::Error;
};

} // namespace cyl
