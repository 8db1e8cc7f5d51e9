#include "radcal/error.hpp"

namespace radcal {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositivePolynomial: return "NonPositivePolynomial";
    case ErrorCode::DenominatorNonPositive: return "DenominatorNonPositive";
    case ErrorCode::EmptyRoi: return "EmptyRoi";
    case ErrorCode::ZeroEstimatedReflectance: return "ZeroEstimatedReflectance";
    case ErrorCode::ZeroIrradiance: return "ZeroIrradiance";
    case ErrorCode::LayoutOverflow: return "LayoutOverflow";
    case ErrorCode::UncoveredScene: return "UncoveredScene";
    case ErrorCode::DegenerateFit: return "DegenerateFit";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::ZeroActual: return "ZeroActual";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::MissingBand: return "MissingBand";
    case ErrorCode::EmptyPlot: return "EmptyPlot";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::MalformedPgm: return "MalformedPgm";
    case ErrorCode::MissingSidecar: return "MissingSidecar";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::NonMonotonicWavelengths: return "NonMonotonicWavelengths";
    case ErrorCode::GapInCoverage: return "GapInCoverage";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace radcal
