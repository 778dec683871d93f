#include "cuecast/error.hpp"

namespace cuecast {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::NonFiniteScore: return "NonFiniteScore";
    case ErrorCode::OutOfRangeScore: return "OutOfRangeScore";
    case ErrorCode::DuplicateFrame: return "DuplicateFrame";
    case ErrorCode::NonMonotonicFrame: return "NonMonotonicFrame";
    case ErrorCode::WrongAUCount: return "WrongAUCount";
    case ErrorCode::OverlapError: return "OverlapError";
    case ErrorCode::NegativeDuration: return "NegativeDuration";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::GapInFrames: return "GapInFrames";
    case ErrorCode::BadProbabilitySum: return "BadProbabilitySum";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::OtherHasNoPair: return "OtherHasNoPair";
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::WrongClassSet: return "WrongClassSet";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::NonPositiveRate: return "NonPositiveRate";
    case ErrorCode::EmptySegment: return "EmptySegment";
    case ErrorCode::TooFewSegments: return "TooFewSegments";
    case ErrorCode::InvalidWindowSpec: return "InvalidWindowSpec";
    case ErrorCode::InvalidEnsembleSpec: return "InvalidEnsembleSpec";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::TooFewClasses: return "TooFewClasses";
    case ErrorCode::EmptyTones: return "EmptyTones";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::EmptyVideo: return "EmptyVideo";
    case ErrorCode::MixedClassSets: return "MixedClassSets";
    case ErrorCode::MisalignedLogs: return "MisalignedLogs";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ZeroSupport: return "ZeroSupport";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InputError: return "InputError";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace cuecast
