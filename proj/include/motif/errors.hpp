#pragma once

#include <stdexcept>
#include <string>

namespace motif {

enum class ErrorCode {
  FileNotFound,
  ParseError,
  EmptySeries,
  IoError,
  SeriesTooShort,
  TooFewSegments,
  DimensionMismatch,
  InvalidThreshold,
  NonFiniteValue,
  InfeasiblePacking,
  MissingMethod,
  ConfigError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Process exit codes: 1 = configuration error, 2 = data error.
inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ConfigError:
      return 1;
    default:
      return 2;
  }
}

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptySeries: return "EmptySeries";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::SeriesTooShort: return "SeriesTooShort";
    case ErrorCode::TooFewSegments: return "TooFewSegments";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidThreshold: return "InvalidThreshold";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::InfeasiblePacking: return "InfeasiblePacking";
    case ErrorCode::MissingMethod: return "MissingMethod";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace motif
