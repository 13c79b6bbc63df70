#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boardforge/error.hpp"
#include "boardforge/graph.hpp"
#include "boardforge/shapes.hpp"
#include "boardforge/tilings.hpp"

namespace boardforge {

enum class TokenKind { LParen, RParen, LBrace, RBrace, Symbol, Integer, Real, KeyVal };

struct Token {
  TokenKind kind;
  std::string text;   // symbol name, literal text, or key for KeyVal
  std::string value;  // KeyVal value text; empty when a bracketed value follows
  Span span;
};

/// Splits a description into tokens. `//` starts a comment running to the end of the line.
std::vector<Token> tokenize(std::string_view text);

struct SExpr {
  enum class Kind { Symbol, Integer, Real, KeyVal, List, Braces };

  Kind kind = Kind::List;
  std::string text;  // symbol name, literal text, or key
  long long integer = 0;
  double real = 0.0;
  std::vector<SExpr> children;  // List/Braces items; a KeyVal holds its value as the only child
  Span span;

  bool is_atom() const { return kind != Kind::List && kind != Kind::Braces; }
  bool is_number() const { return kind == Kind::Integer || kind == Kind::Real; }
  double number() const { return kind == Kind::Integer ? static_cast<double>(integer) : real; }
  /// Structural equality, ignoring spans.
  bool same_as(const SExpr& other) const;
};

SExpr parse(const std::vector<Token>& tokens);
SExpr parse(std::string_view text);

/// Canonical single-line rendering; reparses to a structurally equal tree.
std::string print(const SExpr& expr);

enum class NodeKind { Board, Tiling, Shape, Operator, Graph };

enum class OperatorKind {
  Dual, Subdivide, Merge, Intersect, Remove, Add, Complete,
  Rotate, Scale, Shift, Skew, Trim, Renumber, MakeFaces,
  Keep, Clip, Hole,
};

std::string_view to_string(OperatorKind kind);

/// Typed description tree.
struct BoardExpr {
  NodeKind kind = NodeKind::Board;
  std::string keyword;  // head symbol as written
  Span span;            // from the opening bracket through the head symbol
  std::optional<SiteType> use_site;

  TilingSpec tiling;                  // Tiling
  std::optional<ShapeSpec> shape;     // Tiling outline, Shape, or Keep/Clip/Hole region
  std::optional<DiagType> diagonals;  // Tiling/Shape modifier

  OperatorKind op = OperatorKind::Dual;
  std::vector<double> numbers;  // rotate/scale/shift/skew parameters
  int min_sides = 1;
  std::vector<ElementId> elements;              // remove
  std::vector<Point2> points;                   // add, graph
  std::vector<std::pair<int, int>> edges;       // add, graph

  std::vector<BoardExpr> children;
};

BoardExpr elaborate(const SExpr& expr);

struct EvalOptions {
  bool branching = false;  // radial branching in the final analysis
};

/// Builds the graph bottom-up. A board node sets the default site and attaches the analysis.
BoardGraph evaluate(const BoardExpr& expr, const EvalOptions& options = {});

/// tokenize + parse + elaborate + evaluate.
BoardGraph evaluate_text(std::string_view text, const EvalOptions& options = {});

/// Keywords that are recognized but not implemented.
bool is_unsupported_keyword(std::string_view head);

}  // namespace boardforge
