#include <doctest.h>

#include "boardforge/error.hpp"
#include "boardforge/graph.hpp"
#include "boardforge/tilings.hpp"

using namespace boardforge;

namespace {

BoardGraph lattice(int n) {
  std::vector<Point2> pts;
  std::vector<std::pair<int, int>> edges;
  for (int y = 0; y <= n; ++y) {
    for (int x = 0; x <= n; ++x) {
      pts.push_back({double(x), double(y)});
      const int i = y * (n + 1) + x;
      if (x < n) edges.push_back({i, i + 1});
      if (y < n) edges.push_back({i, i + n + 1});
    }
  }
  return build_graph(pts, edges);
}

}  // namespace

TEST_CASE("single faces") {
  BoardGraph sq = build_graph({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(sq.vertices.size() == 4);
  CHECK(sq.edges.size() == 4);
  CHECK(sq.cells.size() == 1);

  BoardGraph tri = build_graph({{0, 0}, {1, 0}, {0.5, 0.8}}, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(tri.cells.size() == 1);

  std::vector<Point2> hex = {{1, 0}, {0.5, 0.87}, {-0.5, 0.87}, {-1, 0}, {-0.5, -0.87}, {0.5, -0.87}};
  BoardGraph h = build_graph(hex, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  REQUIRE(h.cells.size() == 1);
  CHECK(h.cells[0].vertices.size() == 6);
}

TEST_CASE("lattice faces") {
  BoardGraph g = lattice(2);
  CHECK(g.vertices.size() == 9);
  CHECK(g.edges.size() == 12);
  REQUIRE(g.cells.size() == 4);
  for (const auto& c : g.cells) CHECK(c.vertices.size() == 4);
  CHECK(validate(g).empty());
}

TEST_CASE("no cycle, no cells") {
  BoardGraph g = build_graph({{0, 0}, {1, 0}, {2, 0}}, {{0, 1}, {1, 2}});
  CHECK(g.cells.empty());
  CHECK(g.edges.size() == 2);
}

TEST_CASE("coincident points merge and duplicate edges collapse") {
  BoardGraph g = build_graph({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {1e-8, 0}},
                             {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 0}});
  CHECK(g.vertices.size() == 4);
  CHECK(g.edges.size() == 4);
  CHECK(g.cells.size() == 1);
}

TEST_CASE("degenerate and crossing input") {
  CHECK_THROWS_AS(build_graph({{0, 0}, {0, 0}}, {{0, 1}}), BoardError);
  try {
    build_graph({{0, 0}, {1, 1}, {1, 0}, {0, 1}}, {{0, 1}, {2, 3}});
    FAIL("crossing edges accepted");
  } catch (const BoardError& e) {
    CHECK(e.code() == ErrorCode::NonPlanarInput);
  }
}

TEST_CASE("canonical numbering runs bottom to top, left to right") {
  BoardGraph g = lattice(3);
  for (std::size_t i = 1; i < g.vertices.size(); ++i) {
    const Point2 a = g.vertices[i - 1].position, b = g.vertices[i].position;
    CHECK((a.y < b.y - 1e-9 || (std::abs(a.y - b.y) < 1e-9 && a.x < b.x)));
  }
  CHECK(g.cells[0].centroid.x == doctest::Approx(0.5));
  CHECK(g.cells[0].centroid.y == doctest::Approx(0.5));
  CHECK(g.cells.back().centroid.x == doctest::Approx(2.5));
}

TEST_CASE("cross references") {
  BoardGraph g = lattice(2);
  for (int c = 0; c < static_cast<int>(g.cells.size()); ++c) {
    const auto& cell = g.cells[c];
    for (std::size_t k = 0; k < cell.vertices.size(); ++k) {
      const auto& e = g.edges[cell.edges[k]];
      const int a = cell.vertices[k], b = cell.vertices[(k + 1) % cell.vertices.size()];
      CHECK(((e.v0 == a && e.v1 == b) || (e.v0 == b && e.v1 == a)));
      CHECK(std::find(e.cells.begin(), e.cells.end(), c) != e.cells.end());
    }
  }
  CHECK(g.find_edge(0, 1).has_value());
  CHECK_FALSE(g.find_edge(0, 4).has_value());
}

TEST_CASE("validate reports broken invariants") {
  BoardGraph g = lattice(2);
  const int e = g.cells[0].edges[0];
  auto& cells = g.edges[e].cells;
  cells.erase(std::find(cells.begin(), cells.end(), 0));
  auto v = validate(g);
  REQUIRE(v.size() >= 1);
  bool mismatch = false;
  for (const auto& x : v) mismatch = mismatch || x.kind == ViolationKind::CrossRefMismatch;
  CHECK(mismatch);

  BoardGraph h = lattice(1);
  h.cells[0].vertices.resize(2);
  h.cells[0].edges.resize(2);
  bool degenerate = false;
  for (const auto& x : validate(h)) degenerate = degenerate || x.kind == ViolationKind::DegenerateCell;
  CHECK(degenerate);
}

TEST_CASE("inner vertex blocks a face") {
  // A square with a free vertex inside is not a playable cell.
  BoardGraph g = build_graph({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(g.cells.empty());
  CHECK(g.vertices.size() == 5);
}

TEST_CASE("voids survive explicit assembly") {
  GraphParts parts = to_parts(lattice(3));
  BuildOptions opts;
  opts.voids = {{1.5, 1.5}};
  BoardGraph g = assemble(parts, opts);
  CHECK(g.cells.size() == 8);
  auto voids = find_voids(g);
  REQUIRE(voids.size() == 1);
  CHECK(voids[0].x == doctest::Approx(1.5));
  CHECK(infer_faces(g).cells.size() == 9);
}

TEST_CASE("components and area") {
  BoardGraph g = build_graph({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {5, 5}, {6, 5}, {6, 6}, {5, 6}},
                             {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
  CHECK(component_count(g) == 2);
  CHECK(total_cell_area(g) == doctest::Approx(2.0));
  CHECK_FALSE(has_crossings(g));
}

TEST_CASE("site parsing") {
  auto s = parse_site("Vertex:3:1");
  REQUIRE(s);
  CHECK(s->type == SiteType::Vertex);
  CHECK(s->index == 3);
  CHECK(s->level == 1);
  CHECK(parse_site("Cell:12")->element() == ElementId{SiteType::Cell, 12});
  CHECK_FALSE(parse_site("Face:1"));
  CHECK_FALSE(parse_site("Cell:x"));
  CHECK(to_string(ElementId{SiteType::Edge, 4}) == "Edge:4");
}
