#include <doctest.h>

#include "boardforge/error.hpp"
#include "boardforge/operators.hpp"
#include "boardforge/relations.hpp"
#include "boardforge/tilings.hpp"

using namespace boardforge;

namespace {

BoardGraph outline(std::vector<Point2> pts) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < int(pts.size()); ++i) edges.push_back({i, (i + 1) % int(pts.size())});
  return build_graph(pts, edges);
}

int euler(const BoardGraph& g) { return int(g.vertices.size()) - int(g.edges.size()) + int(g.cells.size()); }

}  // namespace

TEST_CASE("dual") {
  BoardGraph d = dual(generate_square(3));
  CHECK(d.vertices.size() == 9);
  CHECK(d.edges.size() == 12);
  CHECK(d.cells.size() == 4);
  for (const auto& c : d.cells) CHECK(c.vertices.size() == 4);

  BoardGraph strip = dual(generate_rectangle(1, 2));
  CHECK(strip.vertices.size() == 2);
  CHECK(strip.edges.size() == 1);
  CHECK(strip.cells.empty());

  CHECK_THROWS_AS(dual(generate_square(1)), BoardError);
}

TEST_CASE("subdivide") {
  BoardGraph one = subdivide(generate_square(1));
  CHECK(one.cells.size() == 4);
  CHECK(one.vertices.size() == 5);
  CHECK(one.edges.size() == 8);

  BoardGraph t = generate_semiregular(TilingKind::T3464, 2);
  BoardGraph s = subdivide(t, 6);
  int hexagons = 0, squares_before = 0, squares_after = 0;
  for (const auto& c : t.cells) {
    hexagons += c.vertices.size() == 6;
    squares_before += c.vertices.size() == 4;
  }
  for (const auto& c : s.cells) {
    CHECK(c.vertices.size() != 6);
    squares_after += c.vertices.size() == 4;
  }
  CHECK(s.cells.size() == t.cells.size() + 5 * hexagons);
  CHECK(squares_after == squares_before);
  CHECK(total_cell_area(s) == doctest::Approx(total_cell_area(t)).epsilon(1e-12));

  BoardGraph tri = generate_tri(2);
  BoardGraph same = subdivide(tri, 4);
  CHECK(same.cells.size() == tri.cells.size());
  CHECK(same.vertices.size() == tri.vertices.size());
}

TEST_CASE("merge") {
  BoardGraph sq = generate_square(2);
  BoardGraph self = merge(sq, sq);
  CHECK(self.cells.size() == 4);
  CHECK(self.vertices.size() == 9);

  BoardGraph wide = merge(sq, shift(sq, 2, 0));
  CHECK(wide.cells.size() == 8);
  CHECK(wide.vertices.size() == 15);

  BoardGraph apart = merge(generate_square(1), shift(generate_square(1), 5, 5));
  CHECK(apart.cells.size() == 2);
  CHECK(component_count(apart) == 2);
  CHECK(euler(apart) == 2);

  try {
    merge(sq, shift(sq, 0.5, 0.5));
    FAIL("overlap accepted");
  } catch (const BoardError& e) {
    CHECK(e.code() == ErrorCode::NonPlanarOverlap);
  }
}

TEST_CASE("intersect") {
  BoardGraph sq = generate_square(2);
  BoardGraph self = intersect(sq, sq);
  CHECK(self.cells.size() == 4);
  CHECK(self.edges.size() == 12);

  BoardGraph column = intersect(sq, shift(sq, 1, 0));
  CHECK(column.cells.size() == 2);

  BoardGraph none = intersect(generate_square(1), shift(generate_square(1), 3, 3));
  CHECK(none.vertices.empty());
  CHECK_FALSE(none.warnings.empty());
}

TEST_CASE("remove and add") {
  BoardGraph sq = generate_square(2);
  BoardGraph no_cell = remove_elements(sq, {{SiteType::Cell, 0}});
  CHECK(no_cell.cells.size() == 3);
  CHECK(no_cell.edges.size() == 12);

  int centre = -1;
  for (int v = 0; v < 9; ++v) {
    if (coincident(sq.vertices[v].position, {1, 1})) centre = v;
  }
  BoardGraph hollow = remove_elements(sq, {{SiteType::Vertex, centre}});
  CHECK(hollow.vertices.size() == 8);
  CHECK(hollow.edges.size() == 8);
  CHECK(hollow.cells.empty());

  CHECK_THROWS_AS(remove_elements(sq, {{SiteType::Cell, 9}}), BoardError);

  BoardGraph one = generate_square(1);
  BoardGraph split = add_elements(one, {}, {{0, 3}});
  CHECK(split.cells.size() == 2);
  for (const auto& c : split.cells) CHECK(c.vertices.size() == 3);

  BoardGraph hub = add_elements(one, {{0.5, 0.5}}, {{0, 4}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(hub.cells.size() == 4);
}

TEST_CASE("complete") {
  BoardGraph tri = outline({{0, 0}, {1, 0}, {0.5, 1}});
  CHECK(complete(tri).edges.size() == 3);

  BoardGraph sq = outline({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  BoardGraph k4 = complete(sq);
  CHECK(k4.edges.size() == 6);
  CHECK(k4.vertices.size() == 4);
  CHECK(has_crossings(k4));

  std::vector<Point2> pent = regular_polygon({0, 0}, 5, kPi / 2);
  BoardGraph k5 = complete(outline(pent));
  CHECK(k5.vertices.size() == 5);
  CHECK(k5.edges.size() == 10);

  std::vector<Point2> many;
  for (int i = 0; i < 65; ++i) many.push_back({double(i), double(i * i)});
  std::vector<std::pair<int, int>> none;
  try {
    complete(build_graph(many, none));
    FAIL("65 vertices accepted");
  } catch (const BoardError& e) {
    CHECK(e.code() == ErrorCode::TooManyVertices);
  }
}

TEST_CASE("affine transforms") {
  BoardGraph g = generate_hex(2);
  BoardGraph full = rotate(g, 360);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    CHECK(distance(full.vertices[i].position, g.vertices[i].position) < 1e-9);
  }
  BoardGraph ident = scale(g, 1, 1);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) CHECK(ident.vertices[i].position == g.vertices[i].position);

  BoardGraph sq = generate_square(2);
  BoardGraph turned = rotate(sq, 45);
  CHECK(compute_relations(turned) == compute_relations(sq));
  CHECK(validate(turned).empty());

  BoardGraph mirrored = scale(sq, -1, 1);
  CHECK(validate(mirrored).empty());
  CHECK(compute_relations(mirrored) == compute_relations(sq));

  BoardGraph moved = shift(sq, 3, -2);
  CHECK(moved.vertices[0].position.x == doctest::Approx(sq.vertices[0].position.x + 3));

  BoardGraph slanted = skew(sq, 0.5);
  CHECK(validate(slanted).empty());
  CHECK(total_cell_area(slanted) == doctest::Approx(4));

  CHECK_THROWS_AS(scale(sq, 0, 1), BoardError);
}

TEST_CASE("trim") {
  BoardGraph sq = generate_square(2);
  BoardGraph same = trim(sq);
  CHECK(same.vertices.size() == 9);
  CHECK(same.edges.size() == 12);

  BoardGraph tail = add_elements(generate_square(1), {{2, 0}}, {{1, 4}});
  BoardGraph cut = trim(tail);
  CHECK(cut.vertices.size() == 4);
  CHECK(cut.edges.size() == 4);
  CHECK(cut.cells.size() == 1);

  BoardGraph path = build_graph({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  BoardGraph gone = trim(path);
  CHECK(gone.vertices.empty());
  CHECK(gone.edges.empty());
}

TEST_CASE("renumber") {
  BoardGraph g = rotate(generate_semiregular(TilingKind::T3464, 1), 23);
  BoardGraph once = renumber(g);
  BoardGraph twice = renumber(once);
  REQUIRE(once.vertices.size() == twice.vertices.size());
  for (std::size_t i = 0; i < once.vertices.size(); ++i) CHECK(once.vertices[i].position == twice.vertices[i].position);
  for (std::size_t i = 0; i < once.cells.size(); ++i) CHECK(once.cells[i].vertices == twice.cells[i].vertices);

  BoardGraph merged = renumber(merge(shift(generate_square(1), 4, 0), generate_square(1)));
  CHECK(merged.cells[0].centroid.x == doctest::Approx(0.5));

  // Relation tables agree up to the cell permutation.
  RelationTable before = compute_relations(g), after = compute_relations(once);
  std::vector<int> perm(g.cells.size());
  for (std::size_t c = 0; c < g.cells.size(); ++c) {
    for (std::size_t d = 0; d < once.cells.size(); ++d) {
      if (distance(g.cells[c].centroid, once.cells[d].centroid) < 1e-9) perm[c] = int(d);
    }
  }
  for (std::size_t c = 0; c < g.cells.size(); ++c) {
    std::vector<int> mapped;
    for (int d : before.neighbors(SiteType::Cell, RelationType::All, int(c))) mapped.push_back(perm[d]);
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == after.neighbors(SiteType::Cell, RelationType::All, perm[c]));
  }
}

TEST_CASE("make faces") {
  BoardGraph sq = generate_square(3);
  BoardGraph holed = remove_elements(sq, {{SiteType::Cell, 4}});
  CHECK(holed.cells.size() == 8);
  CHECK(make_faces(holed).cells.size() == 9);
}
