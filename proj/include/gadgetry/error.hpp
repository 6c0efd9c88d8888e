#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gadgetry {

enum class ErrorCode {
  DuplicateId,
  UnknownEndpoint,
  LoopEdge,
  RoleConflict,
  IdCollision,
  UnknownTarget,
  UnknownId,
  UnknownVertex,
  ParseError,
  SchemaViolation,
  ColorOutOfRange,
  DuplicateBoundaryId,
  BadParameter,
  NotRainbow,
  MissingTerminal,
  Timeout,
  NotClosed,
  UnverifiedCertificate,
  RealizerUnavailable,
  ReplayMismatch,
};

std::string_view to_string(ErrorCode code);

/// Every library failure is reported through this type; `code()` is stable and
/// the message carries the offending id, field or line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gadgetry
