#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gravdiscord {

enum class ErrorKind {
    InvalidArgument,
    InvalidConfig,
    InvalidOrbit,
    NonPositiveRatio,
    NoRoot,
    InvalidShift,
    OutOfRegime,
    QuadratureFailure,
    OutOfRange,
    DimensionMismatch,
    BadIndex,
    NonPhysical,
    NotInStandardForm,
    OptimizerStall,
    ZeroBaseline,
    IoError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can tell configuration mistakes from numeric breakdowns.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace gravdiscord
