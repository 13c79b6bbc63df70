#pragma once

// Board descriptions shared by the parser tests. Together they use every implemented keyword.

#include <string>
#include <vector>

#include "boardforge/bgdl.hpp"

namespace corpus {

inline const char* kCeltic =
    "(celtic (poly {{3 0}{3 4}{0 4}{0 7}{3 7}{3 11}{6 11}\n"
    "              {6 7}{10 7} {10 5} {6 5}{6 0}}))";

inline std::vector<std::string> descriptions() {
  return {
      "(hex 4)",
      "(tiling T3464 2)",
      kCeltic,
      "(board (square 8))",
      "(board (square 19) use:Vertex)",
      "(board (rectangle 3 5))",
      "(board (hexagon 3))",
      "(board (triangle 4))",
      "(board (regular 6 2.5))",
      "(board (poly {{0 0} {4 0} {4 3} {0 3}}))",
      "(board (square 5 diagonals:Alquerque))",
      "(board (square 3 diagonals:Solid))",
      "(board (tri 4))",
      "(board (tiling hex 3) use:Edge)",
      "(tiling T488 2)",
      "(tiling T4612 1)",
      "(T3636 2)",
      "(tiling T31212 1)",
      "(tiling T33336 1)",
      "(tiling T33344 2)",
      "(dual (tiling T33434 2))",
      "(concentric {1 8 8 8})",
      "(tiling concentric {16 16 16 16})",
      "(brick 4 6)",
      "(tiling T3464 (hexagon 3))",
      "(dual (subdivide (dual (subdivide (tiling T3464 2) min:6))))",
      "(merge (square 2) (shift (square 2) 2 0))",
      "(union (hex 2) (shift (hex 2) 3.4641016151377544 0))",
      "(intersect (square 4) (shift (square 4) 1 1))",
      "(remove (square 3) cells:{4} vertices:{0})",
      "(add (square 1) vertices:{{0.5 0.5}} edges:{{0 4} {3 4}})",
      "(hole (square 6) (square 2))",
      "(keep (hex 5) (regular 6 4))",
      "(clip (tri 6) (poly {{0 0} {3 0} {1.5 2.6}}))",
      "(complete (regular 5))",
      "(rotate (square 3) 45)",
      "(scale (hex 2) 2 1.5)",
      "(scale (tri 2) 3)",
      "(skew (square 3) 0.5)",
      "(trim (add (square 2) vertices:{{3 0}} edges:{{2 9}}))",
      "(renumber (rotate (tri 3) 90))",
      "(makeFaces (complete (regular 4)))",
      "(graph vertices:{{0 0} {1 0} {0 1}} edges:{{0 1} {1 2} {2 0}})",
      "(board (graph {{0 0} {2 0} {1 1.5}} {{0 1} {1 2} {2 0}}))",
      "// comment line\n(board\n  (square 3) // trailing\n  use:Cell)",
  };
}

/// True when the token's span covers exactly its source text and its line/column match the offset.
inline bool span_matches(const std::string& text, const boardforge::Token& t) {
  using boardforge::TokenKind;
  if (t.span.offset < 0 || t.span.end() > static_cast<int>(text.size())) return false;
  int line = 1, column = 1;
  for (int i = 0; i < t.span.offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  if (line != t.span.line || column != t.span.column) return false;
  const std::string slice = text.substr(t.span.offset, t.span.length);
  switch (t.kind) {
    case TokenKind::LParen: return slice == "(";
    case TokenKind::RParen: return slice == ")";
    case TokenKind::LBrace: return slice == "{";
    case TokenKind::RBrace: return slice == "}";
    case TokenKind::KeyVal: return slice == t.text + ":" + t.value;
    default: return slice == t.text;
  }
}

struct Probe {
  std::string text;
  boardforge::ErrorCode code;
  int line;
  int column;
  std::string names;  // text the message must mention
};

inline std::vector<Probe> error_probes() {
  using boardforge::ErrorCode;
  return {
      {kCeltic, ErrorCode::UnsupportedKeyword, 1, 1, "celtic"},
      {"(board (squre 8))", ErrorCode::UnknownKeyword, 1, 8, "squre"},
      {"(board (square 8)", ErrorCode::UnbalancedParens, 1, 1, ""},
      {"(board (square 8)))", ErrorCode::UnexpectedToken, 1, 19, ""},
      {"(board (square))", ErrorCode::ArityError, 1, 8, "square"},
      {"(board\n  (square x))", ErrorCode::TypeError, 2, 11, ""},
      {"(board (square 8) use:Rook)", ErrorCode::TypeError, 1, 23, "use"},
      {"(board (layers 3 (square 8)))", ErrorCode::UnsupportedKeyword, 1, 8, "layers"},
      {"(board (square 8 spiral:3))", ErrorCode::UnsupportedKeyword, 1, 18, "spiral"},
      {"(board (square 8) #)", ErrorCode::LexError, 1, 19, ""},
      {"(dual (square 1))", ErrorCode::TooFewCells, 1, 1, ""},
      {"(board (tri 4 diagonals:Concentric))", ErrorCode::Unsupported, 1, 8, ""},
  };
}

}  // namespace corpus
