#include <doctest.h>

#include <algorithm>

#include "boardforge/error.hpp"
#include "boardforge/analysis.hpp"
#include "boardforge/traversal.hpp"
#include "boardforge/tilings.hpp"

using namespace boardforge;

namespace {

int cell_near(const BoardGraph& g, Point2 p) {
  for (int c = 0; c < int(g.cells.size()); ++c) {
    if (distance(g.cells[c].centroid, p) < 1e-6) return c;
  }
  return -1;
}

}  // namespace

TEST_CASE("steps") {
  BoardGraph g = generate_square(8);
  auto a = analyze(g);
  auto steps = enumerate_steps(g, a->relations, a->directions);
  const int from = cell_near(g, {3.5, 3.5});
  const int up = cell_near(g, {3.5, 4.5});
  const int ne = cell_near(g, {4.5, 4.5});
  bool saw_up = false, saw_ne = false;
  for (const auto& s : steps) {
    CHECK(s.from != s.to);
    CHECK_FALSE(s.relations.empty());
    if (s.from == ElementId{SiteType::Cell, from} && s.to.index == up && s.to.type == SiteType::Cell) {
      saw_up = true;
      CHECK(std::count(s.relations.begin(), s.relations.end(), RelationType::Orthogonal) == 1);
      CHECK(std::count(s.relations.begin(), s.relations.end(), RelationType::Adjacent) == 1);
      CHECK(s.compass == Direction::N);
    }
    if (s.from == ElementId{SiteType::Cell, from} && s.to.index == ne && s.to.type == SiteType::Cell) {
      saw_ne = true;
      CHECK(std::count(s.relations.begin(), s.relations.end(), RelationType::Diagonal) == 1);
      CHECK(std::count(s.relations.begin(), s.relations.end(), RelationType::Orthogonal) == 0);
      CHECK(s.compass == Direction::NE);
    }
  }
  CHECK(saw_up);
  CHECK(saw_ne);

  BoardGraph hex = generate_hex(4);
  auto h = analyze(hex);
  for (const auto& s : enumerate_steps(hex, h->relations, h->directions)) {
    if (s.from.type != SiteType::Cell) continue;
    if (std::count(s.relations.begin(), s.relations.end(), RelationType::Orthogonal)) {
      CHECK(s.relations == std::vector<RelationType>{RelationType::Adjacent, RelationType::Orthogonal, RelationType::All});
    }
  }
}

TEST_CASE("walk parsing") {
  CHECK(parse_walk("F,F,R") == std::vector<WalkToken>{WalkToken::F, WalkToken::F, WalkToken::R});
  CHECK(parse_walk("{F F L}") == std::vector<WalkToken>{WalkToken::F, WalkToken::F, WalkToken::L});
  CHECK_THROWS_AS(parse_walk("F,X"), BoardError);
  CHECK_THROWS_AS(parse_walk(""), BoardError);
}

TEST_CASE("knight walks on a square board") {
  BoardGraph g = generate_square(8);
  auto a = analyze(g);
  const ElementId from{SiteType::Cell, cell_near(g, {2.5, 2.5})};
  auto r = walk(g, a->relations, from, parse_walk("F,F,R"), kPi / 2);
  REQUIRE(r.destinations.size() == 1);
  CHECK(r.destinations[0].index == cell_near(g, {3.5, 4.5}));
  REQUIRE(r.traces.size() == 1);
  CHECK(r.traces[0].front() == from);
  CHECK(r.traces[0].size() == 4);

  CHECK(walk(g, a->relations, from, parse_walk("F,F,R")).destinations.size() == 4);
  CHECK(walk(g, a->relations, from, parse_walk("F,F,L")).destinations.size() == 4);

  // Every forward move is an orthogonal step.
  for (const auto& trace : walk(g, a->relations, from, parse_walk("F,F,R,F")).traces) {
    for (std::size_t k = 1; k < trace.size(); ++k) {
      CHECK(a->relations.related(SiteType::Cell, RelationType::Orthogonal, trace[k - 1].index, trace[k].index));
    }
  }

  const ElementId corner{SiteType::Cell, cell_near(g, {0.5, 0.5})};
  CHECK(walk(g, a->relations, corner, parse_walk("F"), kPi).destinations.empty());
  CHECK_THROWS_AS(walk(g, a->relations, {SiteType::Cell, 64}, parse_walk("F")), BoardError);
}

TEST_CASE("ambiguous walks on 3.4.6.4") {
  BoardGraph g = generate_semiregular(TilingKind::T3464, 2);
  auto a = analyze(g);
  bool witnessed = false;
  for (int c = 0; c < int(g.cells.size()) && !witnessed; ++c) {
    if (g.cells[c].vertices.size() != 4) continue;
    auto all = walk(g, a->relations, {SiteType::Cell, c}, parse_walk("F,F,R"), std::nullopt, Ambiguity::KeepAll);
    auto far = walk(g, a->relations, {SiteType::Cell, c}, parse_walk("F,F,R"), std::nullopt, Ambiguity::Furthest);
    CHECK(far.destinations.size() <= all.destinations.size());
    for (auto d : far.destinations) {
      CHECK(std::find(all.destinations.begin(), all.destinations.end(), d) != all.destinations.end());
    }
    witnessed = all.destinations.size() > far.destinations.size();
  }
  CHECK(witnessed);
}

TEST_CASE("square radials") {
  BoardGraph g = generate_square(8);
  auto a = analyze(g);
  const int corner = cell_near(g, {0.5, 0.5});
  auto north = a->radials.query(corner, Direction::N, a->relations);
  REQUIRE(north.size() == 1);
  CHECK(north[0]->path.size() == 7);
  CHECK(north[0]->path.back() == cell_near(g, {0.5, 7.5}));
  CHECK(a->radials.query(corner, Direction::Adjacent, a->relations).size() == 3);
  CHECK(a->radials.query(corner, Direction::Orthogonal, a->relations).size() == 2);
  CHECK(a->radials.query(corner, Direction::Diagonal, a->relations).size() == 1);
  CHECK(a->radials.query(corner, Direction::S, a->relations).empty());
}

TEST_CASE("radials are simple and deterministic") {
  for (const BoardGraph& g : {generate_tri(4), generate_semiregular(TilingKind::T3464, 2), generate_concentric({1, 8, 8})}) {
    auto a = analyze(g);
    auto again = analyze(g);
    CHECK(a->radials == again->radials);
    for (const auto& r : a->radials.radials) {
      std::vector<int> seen = r.path;
      seen.push_back(r.origin.index);
      std::sort(seen.begin(), seen.end());
      CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
      int prev = r.origin.index;
      for (int x : r.path) {
        CHECK(a->relations.related(r.origin.type, r.relation, prev, x));
        prev = x;
      }
    }
  }
}

TEST_CASE("branching radials alternate on triangles") {
  BoardGraph g = generate_tri(4);
  auto a = analyze(g, true);
  auto plain = analyze(g, false);
  CHECK(a->radials.radials.size() > plain->radials.radials.size());
  bool found = false;
  for (const auto& r : a->radials.radials) {
    if (r.branch == 0) continue;
    auto turns = turn_sequence(g, r);
    bool alternating = turns.size() >= 2;
    for (std::size_t k = 0; k < turns.size(); ++k) {
      alternating = alternating && turns[k] != 0 && (k == 0 || turns[k] == -turns[k - 1]);
    }
    found = found || alternating;
  }
  CHECK(found);
}

TEST_CASE("vertex radials on a go board") {
  BoardGraph g = generate_square(5, SiteType::Vertex);
  g.default_site = SiteType::Vertex;
  auto a = analyze(g);
  CHECK(a->radials.site == SiteType::Vertex);
  int centre = -1;
  for (int v = 0; v < int(g.vertices.size()); ++v) {
    if (coincident(g.vertices[v].position, {2, 2})) centre = v;
  }
  REQUIRE(centre >= 0);
  auto rays = a->radials.query(centre, Direction::Adjacent, a->relations);
  CHECK(rays.size() == 4);
  for (auto* r : rays) CHECK(r->path.size() == 2);
}
