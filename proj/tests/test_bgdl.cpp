#include <doctest.h>

#include "boardforge/error.hpp"
#include "boardforge/analysis.hpp"
#include "boardforge/bgdl.hpp"
#include "corpus.hpp"

using namespace boardforge;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    evaluate_text(text);
  } catch (const BoardError& e) {
    return e.code();
  }
  FAIL("no error for " << text);
  return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("tokens") {
  auto t = tokenize("(hex 4)");
  REQUIRE(t.size() == 4);
  CHECK(t[0].kind == TokenKind::LParen);
  CHECK(t[1].kind == TokenKind::Symbol);
  CHECK(t[1].text == "hex");
  CHECK(t[2].kind == TokenKind::Integer);
  CHECK(t[3].kind == TokenKind::RParen);

  auto kv = tokenize("use:Vertex");
  REQUIRE(kv.size() == 1);
  CHECK(kv[0].kind == TokenKind::KeyVal);
  CHECK(kv[0].text == "use");
  CHECK(kv[0].value == "Vertex");

  auto br = tokenize("{3 0}");
  REQUIRE(br.size() == 4);
  CHECK(br[0].kind == TokenKind::LBrace);
  CHECK(br[3].kind == TokenKind::RBrace);

  CHECK(tokenize("-2.5")[0].kind == TokenKind::Real);
  CHECK(tokenize("// nothing\n").empty());
  auto multi = tokenize("(a\n  b)");
  CHECK(multi[2].span.line == 2);
  CHECK(multi[2].span.column == 3);
  CHECK_THROWS_AS(tokenize("1e5"), BoardError);
  CHECK_THROWS_AS(tokenize("(a $)"), BoardError);
}

TEST_CASE("parse and print") {
  SExpr e = parse("(board (square 8) use:Vertex)");
  REQUIRE(e.kind == SExpr::Kind::List);
  REQUIRE(e.children.size() == 3);
  CHECK(e.children[2].kind == SExpr::Kind::KeyVal);
  CHECK(print(e) == "(board (square 8) use:Vertex)");
  CHECK(print(parse("( poly {{0 0}  {1 0} {0 1}} )")) == "(poly {{0 0} {1 0} {0 1}})");
  for (const auto& text : corpus::descriptions()) {
    SExpr tree = parse(text);
    CHECK(tree.same_as(parse(print(tree))));
  }
  CHECK_FALSE(parse("(a 1)").same_as(parse("(a 2)")));
}

TEST_CASE("elaboration") {
  BoardExpr b = elaborate(parse("(board (square 8))"));
  CHECK(b.kind == NodeKind::Board);
  REQUIRE(b.children.size() == 1);
  CHECK(b.children[0].kind == NodeKind::Shape);
  CHECK(b.children[0].tiling.kind == TilingKind::Square);

  BoardExpr d = elaborate(parse("(dual (tiling T33434 2))"));
  CHECK(d.kind == NodeKind::Operator);
  CHECK(d.op == OperatorKind::Dual);
  CHECK(d.children[0].kind == NodeKind::Tiling);
  CHECK(d.children[0].tiling.kind == TilingKind::T33434);
  CHECK(d.children[0].tiling.rows == 2);

  BoardExpr s = elaborate(parse("(dual (subdivide (tiling T3464 2) min:6))"));
  CHECK(s.children[0].op == OperatorKind::Subdivide);
  CHECK(s.children[0].min_sides == 6);

  BoardExpr u = elaborate(parse("(union (hex 2) (hex 3))"));
  CHECK(u.op == OperatorKind::Merge);
  CHECK(u.keyword == "union");

  BoardExpr go = elaborate(parse("(board (square 19) use:Vertex)"));
  CHECK(go.use_site == SiteType::Vertex);
  CHECK(go.children[0].tiling.use_site == SiteType::Vertex);

  for (const auto& text : corpus::descriptions()) {
    if (text != corpus::kCeltic) CHECK_NOTHROW(elaborate(parse(text)));
  }
}

TEST_CASE("errors carry codes and spans") {
  for (const auto& p : corpus::error_probes()) {
    CAPTURE(p.text);
    try {
      evaluate_text(p.text);
      FAIL("accepted");
    } catch (const BoardError& e) {
      CHECK(e.code() == p.code);
      CHECK(e.span().line == p.line);
      CHECK(e.span().column == p.column);
      if (!p.names.empty()) CHECK(std::string(e.what()).find(p.names) != std::string::npos);
    }
  }
  CHECK(code_of("(square)") == ErrorCode::ArityError);
  CHECK(code_of("(board (square 0))") == ErrorCode::InvalidDimension);
  CHECK(code_of("(board)") == ErrorCode::ArityError);
  CHECK(code_of("(board (square 8) (square 8))") == ErrorCode::ArityError);
  CHECK(code_of("(merge (square 2))") == ErrorCode::ArityError);
  CHECK(code_of("(rotate (square 2))") == ErrorCode::ArityError);
  CHECK(code_of("(keep (square 4) (dual (square 3)))") == ErrorCode::TypeError);
  CHECK(code_of("(board (square 8) colour:Red)") == ErrorCode::TypeError);
  CHECK(code_of("(board 8)") == ErrorCode::TypeError);
  CHECK(code_of(")") == ErrorCode::UnbalancedParens);
  CHECK(code_of("(board (square 8]") == ErrorCode::LexError);
}

TEST_CASE("unsupported keywords are recognised") {
  for (const char* k : {"celtic", "spiral", "quadhex", "repeat", "layers", "wedge", "splitCrossings"}) {
    CHECK(is_unsupported_keyword(k));
  }
  CHECK_FALSE(is_unsupported_keyword("square"));
  try {
    evaluate_text(corpus::kCeltic);
    FAIL("celtic accepted");
  } catch (const BoardError& e) {
    CHECK(e.code() == ErrorCode::UnsupportedKeyword);
    CHECK(e.span().offset == 0);
    CHECK(e.span().length == 7);
  }
}

TEST_CASE("evaluation") {
  BoardGraph chess = evaluate_text("(board (square 8))");
  CHECK(chess.cells.size() == 64);
  REQUIRE(chess.analysis);
  CHECK(chess.default_site == SiteType::Cell);

  BoardGraph go = evaluate_text("(board (square 19) use:Vertex)");
  CHECK(go.vertices.size() == 361);
  CHECK(go.default_site == SiteType::Vertex);
  CHECK(go.analysis->radials.site == SiteType::Vertex);

  BoardGraph rect = evaluate_text("(board (rectangle 3 5))");
  CHECK(rect.cells.size() == 15);

  BoardGraph alq = evaluate_text("(board (square 5 diagonals:Alquerque))");
  CHECK(validate(alq).empty());

  BoardGraph pent = evaluate_text("(board (regular 5))");
  CHECK(pent.cells.size() == 1);
  CHECK(pent.cells[0].vertices.size() == 5);

  BoardGraph holed = evaluate_text("(hole (square 6) (poly {{2 2} {4 2} {4 4} {2 4}}))");
  CHECK(holed.cells.size() == 32);

  BoardGraph fine = evaluate_text("(tiling T3464 (hexagon 3))");
  CHECK(validate(fine).empty());

  for (const auto& text : corpus::descriptions()) {
    if (text == corpus::kCeltic) continue;
    CAPTURE(text);
    CHECK(validate(evaluate_text(text)).empty());
  }

  EvalOptions branching;
  branching.branching = true;
  BoardGraph tri = evaluate_text("(board (tri 3))", branching);
  CHECK(tri.analysis->branching);
}
