#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "boardforge/geometry.hpp"
#include "boardforge/graph.hpp"

namespace boardforge {

enum class TilingKind {
  Square,
  Hex,
  Tri,
  T488,
  T4612,
  T3464,
  T3636,
  T31212,
  T33336,
  T33344,
  T33434,
  Concentric,
  Brick,
};

std::string_view to_string(TilingKind kind);
std::optional<TilingKind> parse_tiling_kind(std::string_view name);
bool is_semiregular(TilingKind kind);
/// Cyclic polygon sizes around every vertex, e.g. {3,4,6,4}. Empty for custom tilings.
std::vector<int> vertex_configuration(TilingKind kind);

struct TilingSpec {
  TilingKind kind = TilingKind::Square;
  int rows = 1;  // also the single size parameter
  int cols = 1;
  SiteType use_site = SiteType::Cell;
  std::vector<int> ring_counts;  // Concentric only
};

/// n x n cells, or n x n vertices when `use_site` is Vertex or Edge.
BoardGraph generate_square(int n, SiteType use_site = SiteType::Cell);
/// rows x cols cells (or vertices in vertex mode).
BoardGraph generate_rectangle(int rows, int cols, SiteType use_site = SiteType::Cell);
/// Pointy-top hexagonal board with n cells per side.
BoardGraph generate_hex(int n, SiteType use_site = SiteType::Cell);
/// Triangular board with n upward triangles along the base (n + 1 vertices per side in vertex mode: n).
BoardGraph generate_tri(int n, SiteType use_site = SiteType::Cell);
/// Translation period of the tiling (unit edges); 1 for the regular tilings.
double lattice_period(TilingKind kind);

BoardGraph generate_semiregular(TilingKind kind, int rings);
BoardGraph generate_concentric(const std::vector<int>& ring_counts);
BoardGraph generate_brick(int rows, int cols);

BoardGraph generate(const TilingSpec& spec);

/// Every tile of the infinite tiling (unit edges) whose centroid lies in the
/// box, in the tiling's native frame. Used for shape-restricted boards.
std::vector<std::vector<Point2>> tile_patch(TilingKind kind, double x0, double x1, double y0, double y1);

/// Builds a board from polygons with shared corners merged.
BoardGraph from_polygons(const std::vector<std::vector<Point2>>& polygons);

}  // namespace boardforge
