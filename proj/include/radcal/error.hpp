// Error taxonomy shared by all radcal components. Each code maps to a
// distinct CLI exit status (see tools/).
#pragma once

#include <stdexcept>
#include <string>

namespace radcal {

enum class ErrorCode {
  NonPositivePolynomial = 1,
  DenominatorNonPositive,
  EmptyRoi,
  ZeroEstimatedReflectance,
  ZeroIrradiance,
  LayoutOverflow,
  UncoveredScene,
  DegenerateFit,
  ZeroVariance,
  ZeroActual,
  ZeroDenominator,
  MissingBand,
  EmptyPlot,
  EmptyWindow,
  MalformedPgm,
  MissingSidecar,
  SchemaViolation,
  NonMonotonicWavelengths,
  GapInCoverage,
  IoFailure,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace radcal
