#include "gtsp/error.hpp"

namespace gtsp {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptySeries: return "EmptySeries";
    case ErrorCode::DuplicateEpoch: return "DuplicateEpoch";
    case ErrorCode::UnsortedEpochs: return "UnsortedEpochs";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::NonPositiveSigma: return "NonPositiveSigma";
    case ErrorCode::InvalidSamplingInterval: return "InvalidSamplingInterval";
    case ErrorCode::WindowOutOfRange: return "WindowOutOfRange";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::SchemaMismatch: return "SchemaMismatch";
    case ErrorCode::InvalidSchema: return "InvalidSchema";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::DegenerateWindow: return "DegenerateWindow";
    case ErrorCode::UnknownWavelet: return "UnknownWavelet";
    case ErrorCode::TooManyFrequencies: return "TooManyFrequencies";
    case ErrorCode::NonPositiveF0: return "NonPositiveF0";
    case ErrorCode::UnderdeterminedSystem: return "UnderdeterminedSystem";
    case ErrorCode::NonCausalEpoch: return "NonCausalEpoch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::EpochMismatch: return "EpochMismatch";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::SeriesTooShort: return "SeriesTooShort";
    case ErrorCode::TooManyInjections: return "TooManyInjections";
    case ErrorCode::NoDeparture: return "NoDeparture";
    case ErrorCode::NoEventInHorizon: return "NoEventInHorizon";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegenerateWindow:
    case ErrorCode::TooManyFrequencies:
    case ErrorCode::UnderdeterminedSystem:
    case ErrorCode::ZeroDenominator:
      return true;
    default:
      return false;
  }
}

}  // namespace gtsp
