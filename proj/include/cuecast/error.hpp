#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cuecast {

// Every failure in the library maps to one of these codes. CLI layers match
// on the code; messages are for humans.
enum class ErrorCode {
  // parsing
  MalformedRow,
  NonFiniteScore,
  OutOfRangeScore,
  DuplicateFrame,
  NonMonotonicFrame,
  WrongAUCount,
  OverlapError,
  NegativeDuration,
  UnknownLabel,
  GapInFrames,
  BadProbabilitySum,
  SchemaError,
  // taxonomy / vectors
  OtherHasNoPair,
  NonFiniteInput,
  WrongClassSet,
  WrongKind,
  // timeline
  NonPositiveRate,
  EmptySegment,
  TooFewSegments,
  InvalidWindowSpec,
  InvalidEnsembleSpec,
  // textualization
  EmptyWindow,
  TooFewClasses,
  EmptyTones,
  OutOfRange,
  // aggregation
  EmptyVideo,
  MixedClassSets,
  MisalignedLogs,
  // metrics
  LengthMismatch,
  ZeroSupport,
  EmptyInput,
  // cli
  InputError,
  UsageError,
  IoError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  Error(ErrorCode code, std::string message, std::size_t line)
      : std::runtime_error(std::move(message)), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace cuecast
