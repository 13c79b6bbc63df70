#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace boardforge {

enum class ErrorCode {
  // graph construction
  DegenerateEdge,
  NonPlanarInput,
  InvalidElement,
  // generators
  InvalidDimension,
  UnsupportedTiling,
  InvalidRingSpec,
  IncompatibleShape,
  InvalidPolygon,
  NoQuadCells,
  Unsupported,
  // operators
  TooFewCells,
  NonPlanarOverlap,
  TooManyVertices,
  SingularTransform,
  // directions
  UnknownFacing,
  UnknownRelation,
  // language
  LexError,
  UnbalancedParens,
  UnexpectedToken,
  UnknownKeyword,
  UnsupportedKeyword,
  ArityError,
  TypeError,
  // io
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Half-open byte range into a description, with 1-based line/column of its start.
struct Span {
  int line = 0;
  int column = 0;
  int offset = 0;
  int length = 0;

  bool valid() const { return line > 0; }
  int end() const { return offset + length; }
  bool operator==(const Span&) const = default;
};

class BoardError : public std::runtime_error {
 public:
  BoardError(ErrorCode code, const std::string& message, Span span = {})
      : std::runtime_error(message), code_(code), span_(span) {}

  ErrorCode code() const { return code_; }
  const Span& span() const { return span_; }
  bool has_span() const { return span_.valid(); }

  /// Returns a copy located at `span` unless a span is already attached.
  BoardError located(Span span) const {
    return BoardError(code_, what(), span_.valid() ? span_ : span);
  }

 private:
  ErrorCode code_;
  Span span_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message, Span span = {}) {
  throw BoardError(code, message, span);
}

}  // namespace boardforge
