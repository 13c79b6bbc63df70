#include <doctest.h>

#include <json.hpp>

#include "boardforge/error.hpp"
#include "boardforge/analysis.hpp"
#include "boardforge/bgdl.hpp"
#include "boardforge/export.hpp"
#include "boardforge/operators.hpp"

using namespace boardforge;

TEST_CASE("json layout") {
  BoardGraph g = evaluate_text("(board (square 2))");
  const std::string text = to_json(g);
  auto j = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"schemaVersion", "defaultSite", "vertices", "edges", "cells", "relations",
                                         "directions", "radials"});
  CHECK(j["vertices"].size() == 9);
  CHECK(j["edges"].size() == 12);
  CHECK(j["cells"].size() == 4);
  for (std::size_t i = 0; i < j["cells"].size(); ++i) CHECK(j["cells"][i]["id"] == i);
  CHECK(j["relations"]["Cell"]["Orthogonal"][0].size() == 2);
  CHECK(j["defaultSite"] == "Cell");
  CHECK(to_json(g) == text);
}

TEST_CASE("json round trip") {
  for (const char* text : {"(board (tiling T3464 1))", "(board (concentric {1 8 8}))", "(rotate (hex 2) 20)",
                           "(board (square 5) use:Vertex)"}) {
    CAPTURE(text);
    BoardGraph g = evaluate_text(text);
    const std::string once = to_json(g);
    BoardGraph back = from_json(once);
    CHECK(back.default_site == g.default_site);
    CHECK(back.rings == g.rings);
    CHECK(back.analysis->relations == ensure_analysis(g).relations);
    CHECK(to_json(back) == once);
    CHECK(validate(back).empty());
  }
}

TEST_CASE("json import errors") {
  CHECK_THROWS_AS(from_json("not json"), BoardError);
  CHECK_THROWS_AS(from_json(R"({"schemaVersion": "9"})"), BoardError);
  try {
    from_json(R"({"schemaVersion": "1", "vertices": [], "edges": [{"id": 0, "v0": 0, "v1": 1}], "cells": []})");
    FAIL("dangling edge accepted");
  } catch (const BoardError& e) {
    CHECK(e.code() == ErrorCode::InvalidElement);
  }
}

TEST_CASE("stable numbers") {
  CHECK(stable_number(-0.0) == 0.0);
  CHECK_FALSE(std::signbit(stable_number(-1e-12)));
  CHECK(stable_number(0.1234567891234) == doctest::Approx(0.123456789));
}

TEST_CASE("svg") {
  BoardGraph g = evaluate_text("(board (square 8))");
  const std::string svg = to_svg(g);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  std::size_t polys = 0;
  for (std::size_t at = svg.find("<polygon"); at != std::string::npos; at = svg.find("<polygon", at + 1)) ++polys;
  CHECK(polys == 64);
  CHECK(to_svg(g) == svg);

  SvgOptions focus;
  focus.radials = true;
  focus.focus = ElementId{SiteType::Cell, 0};
  const std::string rays = to_svg(g, focus);
  std::size_t lines = 0;
  for (std::size_t at = rays.find("<polyline"); at != std::string::npos; at = rays.find("<polyline", at + 1)) ++lines;
  CHECK(lines == 3);

  SvgOptions labels;
  labels.directions = true;
  labels.relations = true;
  labels.focus = ElementId{SiteType::Cell, 27};
  const std::string both = to_svg(g, labels);
  CHECK(both.find(">NE<") != std::string::npos);
  CHECK(both.find("<line") != std::string::npos);
}
