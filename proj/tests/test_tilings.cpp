#include <doctest.h>

#include <algorithm>

#include "boardforge/error.hpp"
#include "boardforge/relations.hpp"
#include "boardforge/tilings.hpp"
#include "oracle.hpp"

using namespace boardforge;

namespace {

std::array<int, 3> counts(const BoardGraph& g) {
  return {int(g.cells.size()), int(g.vertices.size()), int(g.edges.size())};
}

bool boundary_vertex(const BoardGraph& g, int v) {
  for (int e : g.vertices[v].edges) {
    if (g.edges[e].cells.size() < 2) return true;
  }
  return false;
}

// Sizes of the cells around a vertex, in angular order.
std::vector<int> fan(const BoardGraph& g, int v) {
  std::vector<std::pair<double, int>> around;
  for (int c : g.vertices[v].cells) {
    const Point2 d = g.cells[c].centroid - g.vertices[v].position;
    around.push_back({std::atan2(d.y, d.x), int(g.cells[c].vertices.size())});
  }
  std::sort(around.begin(), around.end());
  std::vector<int> out;
  for (auto& a : around) out.push_back(a.second);
  return out;
}

bool same_cycle(std::vector<int> a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < a.size(); ++r) {
      std::rotate(a.begin(), a.begin() + 1, a.end());
      if (a == b) return true;
    }
    std::reverse(a.begin(), a.end());
  }
  return false;
}

}  // namespace

TEST_CASE("regular tiling counts") {
  CHECK(counts(generate_square(8)) == oracle::square_counts(8));
  CHECK(counts(generate_square(1)) == oracle::square_counts(1));
  CHECK(counts(generate_square(19, SiteType::Vertex)) == std::array<int, 3>{324, 361, 684});
  CHECK(counts(generate_hex(1)) == oracle::hex_counts(1));
  CHECK(counts(generate_hex(2)) == oracle::hex_counts(2));
  CHECK(counts(generate_hex(4)) == oracle::hex_counts(4));
  CHECK(counts(generate_tri(1)) == oracle::tri_counts(1));
  CHECK(counts(generate_tri(2)) == oracle::tri_counts(2));
  CHECK(counts(generate_tri(4)) == oracle::tri_counts(4));
  CHECK(counts(generate_rectangle(3, 5)) == std::array<int, 3>{15, 24, 38});
  CHECK(validate(generate_hex(3)).empty());
  CHECK(validate(generate_tri(5)).empty());
}

TEST_CASE("dimension errors") {
  CHECK_THROWS_AS(generate_square(0), BoardError);
  CHECK_THROWS_AS(generate_hex(-1), BoardError);
  try {
    generate_tri(0);
  } catch (const BoardError& e) {
    CHECK(e.code() == ErrorCode::InvalidDimension);
  }
}

TEST_CASE("semi-regular vertex configurations") {
  for (TilingKind kind : {TilingKind::T488, TilingKind::T4612, TilingKind::T3464, TilingKind::T3636,
                          TilingKind::T31212, TilingKind::T33336, TilingKind::T33344, TilingKind::T33434}) {
    CAPTURE(to_string(kind));
    BoardGraph g = generate_semiregular(kind, 2);
    CHECK(validate(g).empty());
    const auto want = vertex_configuration(kind);
    int interior = 0;
    for (int v = 0; v < int(g.vertices.size()); ++v) {
      if (boundary_vertex(g, v)) continue;
      ++interior;
      CHECK(same_cycle(fan(g, v), want));
    }
    CHECK(interior > 0);
  }
  CHECK(vertex_configuration(TilingKind::T3464) == std::vector<int>{3, 4, 6, 4});
  CHECK(vertex_configuration(TilingKind::T488) == std::vector<int>{4, 8, 8});
}

TEST_CASE("tiling names") {
  CHECK(parse_tiling_kind("T33434") == TilingKind::T33434);
  CHECK(parse_tiling_kind("hex") == TilingKind::Hex);
  CHECK_FALSE(parse_tiling_kind("quadhex"));
  CHECK(is_semiregular(TilingKind::T488));
  CHECK_FALSE(is_semiregular(TilingKind::Brick));
}

TEST_CASE("concentric rings") {
  BoardGraph g = generate_concentric({4, 4, 4, 4});
  CHECK(g.cells.size() == 16);
  CHECK(validate(g).empty());
  RelationTable rt = compute_relations(g);
  for (int c = 0; c < 16; ++c) {
    const int ring = g.rings[c].ring;
    if (ring == 1 || ring == 2) CHECK(rt.neighbors(SiteType::Cell, RelationType::Orthogonal, c).size() == 4);
  }
  BoardGraph disc = generate_concentric({1});
  CHECK(disc.cells.size() == 1);
  CHECK(compute_relations(disc).neighbors(SiteType::Cell, RelationType::Orthogonal, 0).empty());
  CHECK(generate_concentric({1, 8, 8}).cells.size() == 17);
  CHECK_THROWS_AS(generate_concentric({}), BoardError);
  CHECK_THROWS_AS(generate_concentric({0, 4}), BoardError);
}

TEST_CASE("brick") {
  BoardGraph one = generate_brick(1, 1);
  CHECK(counts(one) == std::array<int, 3>{1, 4, 4});

  BoardGraph two = generate_brick(2, 2);
  RelationTable rt = compute_relations(two);
  for (int c = 0; c < int(two.cells.size()); ++c) {
    if (two.cells[c].centroid.y > 0.5) continue;
    int above = 0;
    for (int d : rt.neighbors(SiteType::Cell, RelationType::Orthogonal, c)) above += two.cells[d].centroid.y > 0.5;
    if (std::abs(two.cells[c].centroid.x - 1.0) < 1e-9) CHECK(above == 2);
  }

  BoardGraph g = generate_brick(3, 4);
  std::vector<double> areas;
  for (int c = 0; c < int(g.cells.size()); ++c) {
    const auto ring = g.cell_polygon(c);
    double a = 0;
    for (std::size_t k = 0; k < ring.size(); ++k) a += cross(ring[k], ring[(k + 1) % ring.size()]);
    areas.push_back(a / 2);
  }
  const double full = *std::max_element(areas.begin(), areas.end());
  const auto halves = std::count_if(areas.begin(), areas.end(), [&](double a) { return std::abs(a - full / 2) < 1e-9; });
  CHECK(g.cells.size() == 15);
  CHECK(halves == 3);
  CHECK(int(g.vertices.size()) - int(g.edges.size()) + int(g.cells.size()) == 1);
  CHECK(validate(g).empty());
}

TEST_CASE("from polygons merges shared corners") {
  BoardGraph g = from_polygons({{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{1, 0}, {2, 0}, {2, 1}, {1, 1}}});
  CHECK(counts(g) == std::array<int, 3>{2, 6, 7});
}
