#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "boardforge/directions.hpp"
#include "boardforge/graph.hpp"
#include "boardforge/relations.hpp"

namespace boardforge {

/// Two related elements of the same type.
struct Step {
  ElementId from;
  ElementId to;
  std::vector<RelationType> relations;  // every relation that holds, Adjacent..All order
  std::optional<Direction> compass;

  bool operator==(const Step&) const = default;
};

/// One step per ordered related pair, for every site type.
std::vector<Step> enumerate_steps(const BoardGraph& graph, const RelationTable& relations,
                                  const DirectionTable& directions);

enum class WalkToken : std::uint8_t { F, L, R };

/// Parses "F,F,R" (commas and whitespace separate tokens).
std::vector<WalkToken> parse_walk(std::string_view text);

enum class Ambiguity { KeepAll, Furthest };

struct WalkResult {
  std::vector<ElementId> destinations;           // sorted, unique
  std::vector<std::vector<ElementId>> traces;    // one per destination, starting at the origin
};

/// Turtle walk over Orthogonal steps. Without `initial_heading` the walk is run once
/// per distinct step angle at the origin and the destinations are unioned.
WalkResult walk(const BoardGraph& graph, const RelationTable& relations, ElementId origin,
                const std::vector<WalkToken>& tokens, std::optional<double> initial_heading = std::nullopt,
                Ambiguity ambiguity = Ambiguity::KeepAll);

/// A maximal straight-as-possible line of play from an origin.
struct Radial {
  ElementId origin;
  RelationType relation = RelationType::Orthogonal;  // family the steps are drawn from
  std::vector<Direction> labels;                     // directions of the first step
  std::vector<int> path;                             // excluding the origin
  int branch = 0;                                    // sibling index among forks of one initial step

  bool operator==(const Radial&) const = default;
};

/// Upper bound on forks explored per initial step when branching.
inline constexpr int kMaxBranches = 1024;

struct RadialIndex {
  SiteType site = SiteType::Cell;
  std::vector<Radial> radials;  // grouped by origin, then relation, then first step
  std::vector<std::vector<int>> by_origin;

  /// Radials from `origin` whose first step carries `d`. Pseudo-directions select
  /// by relation: Adjacent takes every radial whose first step is adjacent, All takes all.
  std::vector<const Radial*> query(int origin, Direction d, const RelationTable& relations) const;
  bool operator==(const RadialIndex&) const = default;
};

RadialIndex generate_radials(const BoardGraph& graph, const RelationTable& relations, const DirectionTable& directions,
                             bool branching, SiteType site);

/// Turn taken between consecutive steps of a radial: +1 left, -1 right, 0 straight.
std::vector<int> turn_sequence(const BoardGraph& graph, const Radial& radial);

}  // namespace boardforge
