#include "cidr/error.hpp"

namespace cidr {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::EmptyClass: return "EmptyClass";
        case ErrorKind::SameClass: return "SameClass";
        case ErrorKind::CostShapeMismatch: return "CostShapeMismatch";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::NegativeCost: return "NegativeCost";
        case ErrorKind::NonzeroDiagonal: return "NonzeroDiagonal";
        case ErrorKind::ZeroDirection: return "ZeroDirection";
        case ErrorKind::BadTargetDim: return "BadTargetDim";
        case ErrorKind::BadDof: return "BadDof";
        case ErrorKind::InsufficientClassData: return "InsufficientClassData";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::MissingCostMatrix: return "MissingCostMatrix";
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::Config: return "ConfigError";
        case ErrorKind::Io: return "IoError";
    }
    return "Unknown";
}

}  // namespace cidr
