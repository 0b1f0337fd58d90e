#pragma once

#include <stdexcept>
#include <string>

namespace tct {

/// Tensor/operation shape violations (mismatched operands, bad ranks).
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid configuration values (patch divisibility, widths, thresholds).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Argument outside its mathematical domain (e.g. class not in the label set).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// On-disk format violations; message carries the byte offset where parsing failed.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem-level failures (open/read/write).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Non-finite values where finite math is required (losses, gradients).
struct NumericsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A caller broke an API contract (e.g. gradient check on a non-scalar program).
struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tct
