#pragma once

#include <memory>

#include "boardforge/directions.hpp"
#include "boardforge/graph.hpp"
#include "boardforge/relations.hpp"
#include "boardforge/traversal.hpp"

namespace boardforge {

/// Everything derived from a finished board's geometry.
struct Analysis {
  RelationTable relations;
  DirectionTable directions;
  RadialIndex radials;
  bool branching = false;
};

std::shared_ptr<const Analysis> analyze(const BoardGraph& graph, bool branching = false);

/// Attaches a fresh analysis to `graph` (unless one with the same branching mode exists) and returns it.
const Analysis& ensure_analysis(BoardGraph& graph, bool branching = false);

}  // namespace boardforge
