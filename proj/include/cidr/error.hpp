#pragma once

#include <stdexcept>
#include <string>

namespace cidr {

enum class ErrorKind {
    DimensionMismatch,
    NonFinite,
    NotSquare,
    NotSymmetric,
    NotPositiveDefinite,
    NoConvergence,
    EmptyClass,
    SameClass,
    CostShapeMismatch,
    ShapeMismatch,
    NegativeCost,
    NonzeroDiagonal,
    ZeroDirection,
    BadTargetDim,
    BadDof,
    InsufficientClassData,
    EmptyInput,
    InvalidArgument,
    MissingCostMatrix,
    Parse,
    Config,
    Io,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (and tests)
/// can branch on the category without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), message_(message) {}

    ErrorKind kind() const noexcept { return kind_; }
    /// The message without the kind prefix.
    const std::string& message() const noexcept { return message_; }

private:
    ErrorKind kind_;
    std::string message_;
};

}  // namespace cidr
