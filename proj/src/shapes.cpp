#include "boardforge/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "boardforge/error.hpp"

namespace boardforge {

namespace {

const double kSqrt3 = std::sqrt(3.0);

Polygon box(double x0, double x1, double y0, double y1) { return Polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}); }

Polygon hexagon_outline(double radius, double first_deg) {
  std::vector<Point2> pts;
  for (int k = 0; k < 6; ++k) {
    double a = (first_deg + 60.0 * k) * kPi / 180.0;
    pts.push_back({radius * std::cos(a), radius * std::sin(a)});
  }
  return Polygon(pts);
}

// Triangle through three points, pushed outward from its centroid by `margin`.
Polygon inflated_triangle(Point2 a, Point2 b, Point2 c, double margin) {
  Point2 g = (a + b + c) / 3.0;
  std::vector<Point2> pts;
  for (auto p : {a, b, c}) {
    Point2 d = p - g;
    double len = norm(d);
    pts.push_back(len > 0 ? p + d / len * margin : p);
  }
  return Polygon(pts);
}

[[noreturn]] void incompatible(ShapeKind shape, TilingKind tiling) {
  fail(ErrorCode::IncompatibleShape,
       std::string(to_string(shape)) + " outline cannot align with " + std::string(to_string(tiling)) + " tiling");
}

void require_size(int n, std::string_view what) {
  if (n < 1) fail(ErrorCode::InvalidDimension, std::string(what) + " must be at least 1, got " + std::to_string(n));
}

}  // namespace

std::string_view to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Square: return "square";
    case ShapeKind::Rectangle: return "rectangle";
    case ShapeKind::Hexagon: return "hexagon";
    case ShapeKind::Triangle: return "triangle";
    case ShapeKind::RegularPolygon: return "regular";
    case ShapeKind::Poly: return "poly";
  }
  return "?";
}

TilingKind natural_tiling(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Hexagon: return TilingKind::Hex;
    case ShapeKind::Triangle: return TilingKind::Tri;
    default: return TilingKind::Square;
  }
}

Polygon shape_to_polygon(const ShapeSpec& spec, TilingKind tiling) {
  if (tiling == TilingKind::Concentric || tiling == TilingKind::Brick) {
    if (spec.kind != ShapeKind::Poly && spec.kind != ShapeKind::RegularPolygon) incompatible(spec.kind, tiling);
  }
  const double unit = lattice_period(tiling);
  switch (spec.kind) {
    case ShapeKind::Square:
    case ShapeKind::Rectangle: {
      const int rows = spec.rows;
      const int cols = spec.kind == ShapeKind::Square ? spec.rows : spec.cols;
      require_size(rows, "shape rows");
      require_size(cols, "shape columns");
      if (tiling == TilingKind::Square) return box(0, cols, 0, rows);
      if (tiling == TilingKind::Hex) {
        return box(-0.1, kSqrt3 * (cols - 1) + kSqrt3 / 2 + 0.1, -0.1, 1.5 * (rows - 1) + 0.1);
      }
      if (tiling == TilingKind::Tri) incompatible(spec.kind, tiling);
      return box(-cols * unit / 2, cols * unit / 2, -rows * unit / 2, rows * unit / 2);
    }
    case ShapeKind::Hexagon: {
      const int n = spec.rows;
      require_size(n, "hexagon size");
      if (tiling == TilingKind::Hex) return hexagon_outline((n - 1) * kSqrt3 + 0.5, 0.0);
      if (tiling == TilingKind::Tri) return hexagon_outline(n, 0.0);
      if (tiling == TilingKind::Square) incompatible(spec.kind, tiling);
      return hexagon_outline(n * unit, 0.0);
    }
    case ShapeKind::Triangle: {
      const int n = spec.rows;
      require_size(n, "triangle size");
      if (tiling == TilingKind::Tri) return Polygon({{0, 0}, {double(n), 0}, {n / 2.0, n * kSqrt3 / 2}});
      if (tiling == TilingKind::Hex) {
        const double side = kSqrt3 * (n - 1);
        return inflated_triangle({0, 0}, {side, 0}, {side / 2, 1.5 * (n - 1)}, 0.6);
      }
      if (tiling == TilingKind::Square) incompatible(spec.kind, tiling);
      const double side = n * unit;
      return Polygon({{-side / 2, -side * kSqrt3 / 6}, {side / 2, -side * kSqrt3 / 6}, {0, side * kSqrt3 / 3}});
    }
    case ShapeKind::RegularPolygon: {
      if (spec.rows < 3) fail(ErrorCode::InvalidDimension, "regular polygon needs at least 3 sides");
      if (!(spec.size > 0)) fail(ErrorCode::InvalidDimension, "regular polygon size must be positive");
      std::vector<Point2> pts;
      for (int k = 0; k < spec.rows; ++k) {
        double a = kPi / 2 + 2.0 * kPi * k / spec.rows;
        pts.push_back({spec.size * std::cos(a), spec.size * std::sin(a)});
      }
      return Polygon(pts);
    }
    case ShapeKind::Poly: return Polygon(spec.points);
  }
  fail(ErrorCode::IncompatibleShape, "unknown shape");
}

BoardGraph tile_shape(TilingKind tiling, const ShapeSpec& shape, SiteType use_site) {
  if (tiling == TilingKind::Square && (shape.kind == ShapeKind::Square || shape.kind == ShapeKind::Rectangle)) {
    return generate_rectangle(shape.rows, shape.kind == ShapeKind::Square ? shape.rows : shape.cols, use_site);
  }
  if (tiling == TilingKind::Hex && shape.kind == ShapeKind::Hexagon) return generate_hex(shape.rows, use_site);
  if (tiling == TilingKind::Tri && shape.kind == ShapeKind::Triangle) return generate_tri(shape.rows, use_site);
  if (tiling == TilingKind::Concentric || tiling == TilingKind::Brick) {
    fail(ErrorCode::IncompatibleShape, std::string(to_string(tiling)) + " tiling takes no outline shape");
  }
  Polygon outline = shape_to_polygon(shape, tiling);
  double x0 = std::numeric_limits<double>::max(), x1 = -x0, y0 = x0, y1 = -x0;
  for (auto p : outline.points()) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  std::vector<std::vector<Point2>> kept;
  for (auto& tile : tile_patch(tiling, x0, x1, y0, y1)) {
    if (contains(outline, vertex_average(tile))) kept.push_back(std::move(tile));
  }
  BoardGraph g = from_polygons(kept);
  g.default_site = use_site;
  if (g.cells.empty()) g.warnings.push_back("EmptyResult: shape holds no cells");
  return g;
}

BoardGraph restrict(const BoardGraph& graph, const Polygon& region, RestrictMode mode) {
  std::vector<char> keep_cell(graph.cells.size(), 0);
  for (std::size_t c = 0; c < graph.cells.size(); ++c) {
    switch (mode) {
      case RestrictMode::Keep: keep_cell[c] = contains(region, graph.cells[c].centroid); break;
      case RestrictMode::Hole: keep_cell[c] = !contains(region, graph.cells[c].centroid); break;
      case RestrictMode::Clip: {
        bool all = true;
        for (int v : graph.cells[c].vertices) all = all && contains(region, graph.vertices[v].position);
        keep_cell[c] = all;
        break;
      }
    }
  }
  auto region_accepts = [&](Point2 p) { return (mode == RestrictMode::Hole) != contains(region, p); };

  GraphParts parts;
  for (const auto& v : graph.vertices) parts.points.push_back(v.position);
  std::vector<char> used(graph.vertices.size(), 0);
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const auto& er = graph.edges[e];
    bool keep = false;
    if (er.cells.empty()) {
      keep = region_accepts(graph.position({SiteType::Edge, static_cast<int>(e)}));
    } else {
      for (int c : er.cells) keep = keep || keep_cell[c];
    }
    if (keep) {
      parts.edges.push_back({er.v0, er.v1});
      used[er.v0] = used[er.v1] = 1;
    }
  }
  for (std::size_t c = 0; c < graph.cells.size(); ++c) {
    if (!keep_cell[c]) continue;
    parts.cells.push_back(graph.cells[c].vertices);
    if (graph.is_concentric()) parts.rings.push_back(graph.rings[c]);
  }
  // Drop vertices that lost every edge, keeping originally isolated ones inside the region.
  std::vector<int> remap(graph.vertices.size(), -1);
  GraphParts compact;
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    bool isolated = graph.vertices[v].edges.empty();
    if (used[v] || (isolated && region_accepts(graph.vertices[v].position))) {
      remap[v] = static_cast<int>(compact.points.size());
      compact.points.push_back(parts.points[v]);
    }
  }
  for (auto [a, b] : parts.edges) compact.edges.push_back({remap[a], remap[b]});
  for (auto& cyc : parts.cells) {
    std::vector<int> c;
    for (int v : cyc) c.push_back(remap[v]);
    compact.cells.push_back(std::move(c));
  }
  compact.rings = std::move(parts.rings);

  BuildOptions options;
  options.faces = FaceMode::Given;
  options.allow_crossings = true;
  BoardGraph out = assemble(std::move(compact), options);
  out.default_site = graph.default_site;
  if (out.cells.empty() && !graph.cells.empty()) out.warnings.push_back("EmptyResult: no cells remain after restriction");
  return out;
}

std::optional<DiagType> parse_diag_type(std::string_view name) {
  if (name == "Alquerque") return DiagType::Alquerque;
  if (name == "Solid") return DiagType::Solid;
  if (name == "Concentric") return DiagType::Concentric;
  if (name == "Radiating") return DiagType::Radiating;
  return std::nullopt;
}

BoardGraph add_diagonal_edges(const BoardGraph& graph, DiagType type) {
  if (type == DiagType::Concentric || type == DiagType::Radiating) {
    fail(ErrorCode::Unsupported, "diagonal type is reserved but not implemented");
  }
  const int nc = graph.count(SiteType::Cell);
  std::vector<char> quad(nc, 0);
  int first = -1;
  for (int c = 0; c < nc; ++c) {
    quad[c] = graph.cells[c].vertices.size() == 4;
    if (quad[c] && first < 0) first = c;
  }
  if (first < 0) fail(ErrorCode::NoQuadCells, "no quadrilateral cells to receive diagonals");

  std::vector<char> selected(nc, 0);
  if (type == DiagType::Solid) {
    selected = quad;
  } else {
    // Checkerboard parity over edge-adjacent quads, anchored at the lowest quad of each component.
    std::vector<int> colour(nc, -1);
    for (int seed = 0; seed < nc; ++seed) {
      if (!quad[seed] || colour[seed] >= 0) continue;
      colour[seed] = 0;
      std::deque<int> queue{seed};
      while (!queue.empty()) {
        int c = queue.front();
        queue.pop_front();
        for (int e : graph.cells[c].edges) {
          for (int d : graph.edges[e].cells) {
            if (d == c || !quad[d] || colour[d] >= 0) continue;
            colour[d] = 1 - colour[c];
            queue.push_back(d);
          }
        }
      }
    }
    for (int c = 0; c < nc; ++c) selected[c] = quad[c] && colour[c] == 0;
  }

  GraphParts parts = to_parts(graph);
  parts.cells.clear();
  std::vector<RingSector> rings;
  for (int c = 0; c < nc; ++c) {
    const auto& cyc = graph.cells[c].vertices;
    if (!selected[c]) {
      parts.cells.push_back(cyc);
      if (graph.is_concentric()) rings.push_back(graph.rings[c]);
      continue;
    }
    int hub = static_cast<int>(parts.points.size());
    parts.points.push_back(graph.cells[c].centroid);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      parts.cells.push_back({cyc[k], cyc[(k + 1) % cyc.size()], hub});
      if (graph.is_concentric()) rings.push_back(graph.rings[c]);
    }
  }
  parts.rings = std::move(rings);
  BuildOptions options;
  options.faces = FaceMode::Given;
  options.allow_crossings = true;
  BoardGraph out = assemble(std::move(parts), options);
  out.default_site = graph.default_site;
  return out;
}

}  // namespace boardforge
