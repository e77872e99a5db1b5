#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gtsp {

enum class ErrorCode {
  // core-model
  EmptySeries,
  DuplicateEpoch,
  UnsortedEpochs,
  NonFiniteValue,
  NonPositiveSigma,
  InvalidSamplingInterval,
  WindowOutOfRange,
  InvalidConfig,
  // ingest
  UnknownFormat,
  MalformedLine,
  SchemaMismatch,
  InvalidSchema,
  // preprocess / wavelet / harmonic
  EmptyWindow,
  DegenerateWindow,
  UnknownWavelet,
  TooManyFrequencies,
  NonPositiveF0,
  UnderdeterminedSystem,
  // predictor
  NonCausalEpoch,
  // metrics
  EmptyInput,
  LengthMismatch,
  EpochMismatch,
  ZeroDenominator,
  InsufficientData,
  // outlier-lab
  SeriesTooShort,
  TooManyInjections,
  // event-detector
  NoDeparture,
  NoEventInHorizon,
  // generic
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for failures of the numerical pipeline rather than of the input data.
bool is_numerical(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gtsp
