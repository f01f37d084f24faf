#pragma once

#include <stdexcept>
#include <string>

namespace ahgmm {

/// File could not be read or written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File exists but is not a raster format this library understands.
struct FormatError : IoError {
    using IoError::IoError;
};

/// Kernel construction failed (support exceeds the configured maximum,
/// or the spec is numerically degenerate).
struct KernelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad configuration file or inconsistent configured values.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ahgmm
