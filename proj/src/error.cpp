#include "boardforge/error.hpp"

namespace boardforge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateEdge: return "DegenerateEdge";
    case ErrorCode::NonPlanarInput: return "NonPlanarInput";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::UnsupportedTiling: return "UnsupportedTiling";
    case ErrorCode::InvalidRingSpec: return "InvalidRingSpec";
    case ErrorCode::IncompatibleShape: return "IncompatibleShape";
    case ErrorCode::InvalidPolygon: return "InvalidPolygon";
    case ErrorCode::NoQuadCells: return "NoQuadCells";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::TooFewCells: return "TooFewCells";
    case ErrorCode::NonPlanarOverlap: return "NonPlanarOverlap";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::SingularTransform: return "SingularTransform";
    case ErrorCode::UnknownFacing: return "UnknownFacing";
    case ErrorCode::UnknownRelation: return "UnknownRelation";
    case ErrorCode::LexError: return "LexError";
    case ErrorCode::UnbalancedParens: return "UnbalancedParens";
    case ErrorCode::UnexpectedToken: return "UnexpectedToken";
    case ErrorCode::UnknownKeyword: return "UnknownKeyword";
    case ErrorCode::UnsupportedKeyword: return "UnsupportedKeyword";
    case ErrorCode::ArityError: return "ArityError";
    case ErrorCode::TypeError: return "TypeError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace boardforge
