#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "boardforge/geometry.hpp"
#include "boardforge/graph.hpp"
#include "boardforge/tilings.hpp"

namespace boardforge {

enum class ShapeKind { Square, Rectangle, Hexagon, Triangle, RegularPolygon, Poly };

std::string_view to_string(ShapeKind kind);

struct ShapeSpec {
  ShapeKind kind = ShapeKind::Square;
  int rows = 1;   // Square/Hexagon/Triangle size; Rectangle rows; Regular side count
  int cols = 1;   // Rectangle columns
  double size = 1.0;  // Regular circumradius
  std::vector<Point2> points;  // Poly
};

/// Board outline in the tiling's native frame, sized so that `rows` cells fit per side.
Polygon shape_to_polygon(const ShapeSpec& spec, TilingKind tiling);

/// Default tiling for a stand-alone shape.
TilingKind natural_tiling(ShapeKind kind);

/// Every cell of `tiling` whose centroid lies in the shape outline.
BoardGraph tile_shape(TilingKind tiling, const ShapeSpec& shape, SiteType use_site = SiteType::Cell);

enum class RestrictMode { Keep, Clip, Hole };

/// Keep: cells whose centroid is inside. Clip: cells with every corner inside.
/// Hole: cells whose centroid is outside. Orphaned edges and vertices are dropped.
BoardGraph restrict(const BoardGraph& graph, const Polygon& region, RestrictMode mode);

enum class DiagType { Alquerque, Solid, Concentric, Radiating };

std::optional<DiagType> parse_diag_type(std::string_view name);

/// Splits selected quadrilateral cells into four triangles around a new centre vertex.
BoardGraph add_diagonal_edges(const BoardGraph& graph, DiagType type);

}  // namespace boardforge
