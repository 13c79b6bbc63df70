#include "boardforge/directions.hpp"

#include <cmath>

#include "boardforge/error.hpp"

namespace boardforge {

namespace {

constexpr std::string_view kDirectionNames[] = {
    "N",  "NNE", "NE",  "ENE", "E",  "ESE", "SE",  "SSE",      "S",          "SSW",      "SW",          "WSW", "W",
    "WNW", "NW", "NNW", "In",  "Out", "CW", "CCW", "Adjacent", "Orthogonal", "Diagonal", "OffDiagonal", "All",
};

constexpr std::string_view kRelativeNames[] = {
    "Forward", "Backward", "Rightward", "Leftward", "FR", "FRR", "FRRR", "FL",
    "FLL",     "FLLL",     "BR",        "BRR",      "BRRR", "BL", "BLL", "BLLL",
};

void label_rings(const BoardGraph& g, std::vector<std::map<Direction, int>>& out) {
  std::map<std::pair<int, int>, int> at;
  std::map<int, int> sectors;
  for (std::size_t c = 0; c < g.rings.size(); ++c) {
    at[{g.rings[c].ring, g.rings[c].sector}] = static_cast<int>(c);
    sectors[g.rings[c].ring] = g.rings[c].sectors;
  }
  auto find = [&](int ring, int sector) -> std::optional<int> {
    auto it = at.find({ring, sector});
    if (it == at.end()) return std::nullopt;
    return it->second;
  };
  for (std::size_t c = 0; c < g.rings.size(); ++c) {
    const auto rs = g.rings[c];
    if (rs.sectors > 1) {
      if (auto n = find(rs.ring, (rs.sector + rs.sectors - 1) % rs.sectors)) out[c][Direction::CW] = *n;
      if (auto n = find(rs.ring, (rs.sector + 1) % rs.sectors)) out[c][Direction::CCW] = *n;
      auto inner = sectors.find(rs.ring - 1);
      if (inner != sectors.end()) {
        // A ring of one cell is the central disc, reachable from every sector.
        if (auto n = find(rs.ring - 1, inner->second == 1 ? 0 : rs.sector)) out[c][Direction::In] = *n;
      }
      auto outer = sectors.find(rs.ring + 1);
      if (outer != sectors.end() && outer->second == rs.sectors) {
        if (auto n = find(rs.ring + 1, rs.sector)) out[c][Direction::Out] = *n;
      }
    }
  }
}

}  // namespace

std::string_view to_string(Direction d) { return kDirectionNames[static_cast<int>(d)]; }

std::optional<Direction> parse_direction(std::string_view s) {
  for (int i = 0; i < static_cast<int>(std::size(kDirectionNames)); ++i) {
    if (kDirectionNames[i] == s) return static_cast<Direction>(i);
  }
  return std::nullopt;
}

bool is_wind(Direction d) { return static_cast<int>(d) < kWindCount; }

bool is_rotational(Direction d) {
  return d == Direction::In || d == Direction::Out || d == Direction::CW || d == Direction::CCW;
}

std::optional<RelationType> as_relation(Direction d) {
  switch (d) {
    case Direction::Adjacent: return RelationType::Adjacent;
    case Direction::Orthogonal: return RelationType::Orthogonal;
    case Direction::Diagonal: return RelationType::Diagonal;
    case Direction::OffDiagonal: return RelationType::OffDiagonal;
    case Direction::All: return RelationType::All;
    default: return std::nullopt;
  }
}

double wind_angle(Direction d) { return (90.0 - 22.5 * static_cast<int>(d)) * kPi / 180.0; }

std::pair<Direction, double> nearest_wind(double radians) {
  const double deg = radians * 180.0 / kPi;
  int k = static_cast<int>(std::lround((90.0 - deg) / 22.5));
  k = ((k % kWindCount) + kWindCount) % kWindCount;
  const auto d = static_cast<Direction>(k);
  return {d, angle_between(radians, wind_angle(d))};
}

std::string_view to_string(RelativeDirection d) { return kRelativeNames[static_cast<int>(d)]; }

std::optional<RelativeDirection> parse_relative_direction(std::string_view s) {
  for (int i = 0; i < static_cast<int>(std::size(kRelativeNames)); ++i) {
    if (kRelativeNames[i] == s) return static_cast<RelativeDirection>(i);
  }
  return std::nullopt;
}

double clockwise_offset_degrees(RelativeDirection d) {
  switch (d) {
    case RelativeDirection::Forward: return 0.0;
    case RelativeDirection::Backward: return 180.0;
    case RelativeDirection::Rightward: return 90.0;
    case RelativeDirection::Leftward: return -90.0;
    case RelativeDirection::FR: return 45.0;
    case RelativeDirection::FRR: return 67.5;
    case RelativeDirection::FRRR: return 78.75;
    case RelativeDirection::FL: return -45.0;
    case RelativeDirection::FLL: return -67.5;
    case RelativeDirection::FLLL: return -78.75;
    case RelativeDirection::BR: return 135.0;
    case RelativeDirection::BRR: return 112.5;
    case RelativeDirection::BRRR: return 101.25;
    case RelativeDirection::BL: return -135.0;
    case RelativeDirection::BLL: return -112.5;
    case RelativeDirection::BLLL: return -101.25;
  }
  return 0.0;
}

std::optional<int> DirectionTable::neighbor(ElementId from, Direction d) const {
  const auto& m = labels[static_cast<int>(from.type)][from.index];
  auto it = m.find(d);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

std::vector<Direction> DirectionTable::directions_to(ElementId from, int to) const {
  std::vector<Direction> out;
  for (auto [d, n] : labels[static_cast<int>(from.type)][from.index]) {
    if (n == to) out.push_back(d);
  }
  return out;
}

double step_angle(const BoardGraph& graph, SiteType type, int from, int to) {
  return heading_of(graph.position({type, to}) - graph.position({type, from}));
}

DirectionTable assign_directions(const BoardGraph& graph, const RelationTable& relations) {
  DirectionTable table;
  for (SiteType t : kAllSiteTypes) {
    const int n = graph.count(t);
    auto& out = table.labels[static_cast<int>(t)];
    out.assign(n, {});
    for (int i = 0; i < n; ++i) {
      std::map<Direction, std::pair<double, int>> best;
      for (int j : relations.neighbors(t, RelationType::Adjacent, i)) {
        auto [wind, err] = nearest_wind(step_angle(graph, t, i, j));
        if (err >= kWindTolerance) continue;
        auto it = best.find(wind);
        // Ascending j means an exact tie keeps the lower index.
        if (it == best.end() || err < it->second.first - kAngleTol) best[wind] = {err, j};
      }
      for (auto [wind, scored] : best) out[i][wind] = scored.second;
    }
    if (t == SiteType::Cell && graph.is_concentric()) label_rings(graph, out);
  }
  return table;
}

std::optional<int> resolve_relative(const BoardGraph& graph, const RelationTable& relations, ElementId from,
                                    Direction facing, int rotation, RelationType relation, RelativeDirection rel) {
  if (!is_wind(facing)) {
    fail(ErrorCode::UnknownFacing, std::string(to_string(facing)) + " cannot serve as a facing direction");
  }
  if (!graph.valid(from)) fail(ErrorCode::InvalidElement, "no such element " + to_string(from));
  const double heading = wind_angle(facing) - rotation * kPi / 4;
  const double target = heading - clockwise_offset_degrees(rel) * kPi / 180.0;
  std::optional<int> pick;
  double pick_err = kPi / 8 - kAngleTol;  // strictly within 22.5 degrees
  for (int j : relations.neighbors(from.type, relation, from.index)) {
    const double err = angle_between(step_angle(graph, from.type, from.index, j), target);
    if (err < pick_err) {
      pick_err = err;
      pick = j;
    }
  }
  return pick;
}

}  // namespace boardforge
