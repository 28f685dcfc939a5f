#include "freealg/error.hpp"

namespace freealg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::BadFieldSelector: return "BadFieldSelector";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::BadWeights: return "BadWeights";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::BadCoefficient: return "BadCoefficient";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::HypothesesNotMet: return "HypothesesNotMet";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::ConstantInput: return "ConstantInput";
    case ErrorCode::NoCertificateWithinBounds: return "NoCertificateWithinBounds";
    case ErrorCode::NotARetraction: return "NotARetraction";
    case ErrorCode::ProperSubductionFailure: return "ProperSubductionFailure";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotFixing: return "NotFixing";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::FloorCollapse: return "FloorCollapse";
    case ErrorCode::NotASquareLeading: return "NotASquareLeading";
    case ErrorCode::NotAnNthPowerLeading: return "NotAnNthPowerLeading";
    case ErrorCode::CharDividesN: return "CharDividesN";
    case ErrorCode::BasisExhausted: return "BasisExhausted";
    case ErrorCode::InsufficientFloor: return "InsufficientFloor";
    case ErrorCode::ImprimitiveU: return "ImprimitiveU";
    case ErrorCode::BadBound: return "BadBound";
    case ErrorCode::BadArgument: return "BadArgument";
  }
  return "Unknown";
}

}  // namespace freealg
