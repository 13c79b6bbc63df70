#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "boardforge/graph.hpp"

namespace boardforge {

enum class RelationType : std::uint8_t { Adjacent, Orthogonal, Diagonal, OffDiagonal, All };

inline constexpr RelationType kAllRelations[] = {RelationType::Adjacent, RelationType::Orthogonal, RelationType::Diagonal,
                                                 RelationType::OffDiagonal, RelationType::All};

std::string_view to_string(RelationType r);
std::optional<RelationType> parse_relation_type(std::string_view s);

using NeighborLists = std::vector<std::vector<int>>;

/// Same-type neighbor lists for every site type and relation. Lists are sorted and symmetric.
struct RelationTable {
  std::array<std::array<NeighborLists, 5>, 3> lists;
  /// Parallel to the Diagonal lists: the shared vertex (cells, case 1), the bridging
  /// edge (cells, case 2) or the shared cell (vertices).
  std::array<std::vector<std::vector<ElementId>>, 3> diagonal_pivots;

  const std::vector<int>& neighbors(SiteType t, RelationType r, int index) const {
    return lists[static_cast<int>(t)][static_cast<int>(r)][index];
  }
  const NeighborLists& table(SiteType t, RelationType r) const { return lists[static_cast<int>(t)][static_cast<int>(r)]; }
  bool related(SiteType t, RelationType r, int a, int b) const;

  bool operator==(const RelationTable&) const = default;
};

/// Longest bridging edge considered for edge-bridged cell diagonals.
inline constexpr double kBridgeLength = 2.0;

RelationTable compute_relations(const BoardGraph& graph);

/// Direction of the interior-angle bisector of `cell` at its corner `vertex`, in radians.
double corner_bisector(const BoardGraph& graph, int cell, int vertex);

}  // namespace boardforge
