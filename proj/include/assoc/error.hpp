#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace assoc {

enum class Errc {
    // numerics
    SingularSystem,
    NotSymmetric,
    NotCommuting,
    // scheme axioms
    NotPartition,
    IdentityMissing,
    NotClosed,
    NotCommutative,
    NotZeroOne,
    ShapeMismatch,
    DegenerateSplit,
    // builders
    OddOrder,
    TooLarge,
    TooSmall,
    NotAmbivalent,
    NotLatinSquare,
    BadParameter,
    UnknownBuilder,
    // resistance
    Disconnected,
    ZeroDenominator,
    FewerEigenvalues,
    OutOfRange,
    InvalidArray,
    StratumSpread,
    QuadratureNotConverged,
    MethodPreconditionViolated,
    // io
    ParseError,
};

std::string_view errc_name(Errc code);

/// Single exception type for the library; `code()` says which contract broke.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace assoc
