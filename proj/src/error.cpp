#include "gravdiscord/error.hpp"

namespace gravdiscord {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::InvalidConfig: return "InvalidConfig";
        case ErrorKind::InvalidOrbit: return "InvalidOrbit";
        case ErrorKind::NonPositiveRatio: return "NonPositiveRatio";
        case ErrorKind::NoRoot: return "NoRoot";
        case ErrorKind::InvalidShift: return "InvalidShift";
        case ErrorKind::OutOfRegime: return "OutOfRegime";
        case ErrorKind::QuadratureFailure: return "QuadratureFailure";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::BadIndex: return "BadIndex";
        case ErrorKind::NonPhysical: return "NonPhysical";
        case ErrorKind::NotInStandardForm: return "NotInStandardForm";
        case ErrorKind::OptimizerStall: return "OptimizerStall";
        case ErrorKind::ZeroBaseline: return "ZeroBaseline";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace gravdiscord
