#pragma once

#include <array>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "boardforge/graph.hpp"
#include "boardforge/relations.hpp"

namespace boardforge {

enum class Direction : std::uint8_t {
  // the 16 winds, clockwise from North
  N, NNE, NE, ENE, E, ESE, SE, SSE, S, SSW, SW, WSW, W, WNW, NW, NNW,
  // rotational
  In, Out, CW, CCW,
  // relation-type pseudo-directions
  Adjacent, Orthogonal, Diagonal, OffDiagonal, All,
};

inline constexpr int kWindCount = 16;

std::string_view to_string(Direction d);
std::optional<Direction> parse_direction(std::string_view s);
bool is_wind(Direction d);
bool is_rotational(Direction d);
/// The relation a pseudo-direction stands for.
std::optional<RelationType> as_relation(Direction d);
/// Compass angle in radians (E = 0, N = pi/2). Winds only.
double wind_angle(Direction d);
/// Wind whose angle is nearest to `radians`, with the absolute error.
std::pair<Direction, double> nearest_wind(double radians);

enum class RelativeDirection : std::uint8_t {
  Forward, Backward, Rightward, Leftward,
  FR, FRR, FRRR, FL, FLL, FLLL,
  BR, BRR, BRRR, BL, BLL, BLLL,
};

std::string_view to_string(RelativeDirection d);
std::optional<RelativeDirection> parse_relative_direction(std::string_view s);
/// Clockwise offset from the heading, in degrees. Leftward variants are negative.
double clockwise_offset_degrees(RelativeDirection d);

/// Per element, direction -> neighbor of the same type.
struct DirectionTable {
  std::array<std::vector<std::map<Direction, int>>, 3> labels;

  std::optional<int> neighbor(ElementId from, Direction d) const;
  /// Directions under which `to` is reached from `from`.
  std::vector<Direction> directions_to(ElementId from, int to) const;
  bool operator==(const DirectionTable&) const = default;
};

/// Half the spacing between winds: larger errors leave a step unlabeled.
inline constexpr double kWindTolerance = kPi / 16;

DirectionTable assign_directions(const BoardGraph& graph, const RelationTable& relations);

/// Neighbor in relative direction `rel` for a piece at `from` facing `facing` after
/// `rotation` rightward 45-degree turns; none if no related step lies within 22.5 degrees.
std::optional<int> resolve_relative(const BoardGraph& graph, const RelationTable& relations, ElementId from,
                                    Direction facing, int rotation, RelationType relation, RelativeDirection rel);

/// Heading of the step between two same-type elements.
double step_angle(const BoardGraph& graph, SiteType type, int from, int to);

}  // namespace boardforge
