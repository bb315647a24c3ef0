#include "assoc/error.hpp"

namespace assoc {

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::SingularSystem: return "SingularSystem";
        case Errc::NotSymmetric: return "NotSymmetric";
        case Errc::NotCommuting: return "NotCommuting";
        case Errc::NotPartition: return "NotPartition";
        case Errc::IdentityMissing: return "IdentityMissing";
        case Errc::NotClosed: return "NotClosed";
        case Errc::NotCommutative: return "NotCommutative";
        case Errc::NotZeroOne: return "NotZeroOne";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::DegenerateSplit: return "DegenerateSplit";
        case Errc::OddOrder: return "OddOrder";
        case Errc::TooLarge: return "TooLarge";
        case Errc::TooSmall: return "TooSmall";
        case Errc::NotAmbivalent: return "NotAmbivalent";
        case Errc::NotLatinSquare: return "NotLatinSquare";
        case Errc::BadParameter: return "BadParameter";
        case Errc::UnknownBuilder: return "UnknownBuilder";
        case Errc::Disconnected: return "Disconnected";
        case Errc::ZeroDenominator: return "ZeroDenominator";
        case Errc::FewerEigenvalues: return "FewerEigenvalues";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::InvalidArray: return "InvalidArray";
        case Errc::StratumSpread: return "StratumSpread";
        case Errc::QuadratureNotConverged: return "QuadratureNotConverged";
        case Errc::MethodPreconditionViolated: return "MethodPreconditionViolated";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace assoc
