#include "boardforge/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "boardforge/error.hpp"

namespace boardforge {

namespace {

BuildOptions given() {
  BuildOptions o;
  o.faces = FaceMode::Given;
  o.allow_crossings = true;
  return o;
}

BoardGraph finish(BoardGraph out, const BoardGraph& like) {
  out.default_site = like.default_site;
  return out;
}

// Fan hub for a cell: the vertex average when every fan triangle is positive,
// otherwise the first candidate that keeps the fan simple.
Point2 fan_hub(const std::vector<Point2>& ring) {
  auto fans_cleanly = [&](Point2 h) {
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (cross(ring[i] - h, ring[(i + 1) % ring.size()] - h) <= kMergeEps * kMergeEps) return false;
    }
    return true;
  };
  const Point2 avg = vertex_average(ring);
  if (fans_cleanly(avg)) return avg;
  double a = 0, cx = 0, cy = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point2 p = ring[i], q = ring[(i + 1) % ring.size()];
    const double w = cross(p, q);
    a += w;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  if (std::abs(a) > 0) {
    Point2 area_centroid{cx / (3 * a), cy / (3 * a)};
    if (fans_cleanly(area_centroid)) return area_centroid;
  }
  Point2 inner = interior_point(ring);
  if (fans_cleanly(inner)) return inner;
  return avg;
}

Point2 bbox_centre(const BoardGraph& g) {
  if (g.vertices.empty()) return {0, 0};
  double x0 = std::numeric_limits<double>::max(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& v : g.vertices) {
    x0 = std::min(x0, v.position.x);
    x1 = std::max(x1, v.position.x);
    y0 = std::min(y0, v.position.y);
    y1 = std::max(y1, v.position.y);
  }
  return {(x0 + x1) / 2, (y0 + y1) / 2};
}

// Applies p -> m * (p - pivot) + pivot + offset without touching element numbering.
BoardGraph apply_affine(const BoardGraph& g, double m00, double m01, double m10, double m11, Point2 pivot, Point2 offset) {
  const double det = m00 * m11 - m01 * m10;
  if (!std::isfinite(det) || std::abs(det) < 1e-12) fail(ErrorCode::SingularTransform, "transform is not invertible");
  BoardGraph out = g;
  out.analysis.reset();
  out.warnings.clear();
  auto map = [&](Point2 p) {
    Point2 d = p - pivot;
    return Point2{m00 * d.x + m01 * d.y, m10 * d.x + m11 * d.y} + pivot + offset;
  };
  for (auto& v : out.vertices) v.position = map(v.position);
  for (auto& c : out.cells) c.centroid = map(c.centroid);
  if (det < 0) {
    for (auto& c : out.cells) {
      std::reverse(c.vertices.begin(), c.vertices.end());
      std::rotate(c.vertices.begin(), std::min_element(c.vertices.begin(), c.vertices.end()), c.vertices.end());
      c.edges.clear();
      for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        c.edges.push_back(*out.find_edge(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]));
      }
    }
  }
  // Outgoing angles change under any non-similarity map, so always re-sort.
  for (std::size_t v = 0; v < out.vertices.size(); ++v) {
    auto& vr = out.vertices[v];
    const Point2 at = vr.position;
    auto angle = [&](int e) {
      return wrap_positive(heading_of(out.vertices[out.edges[e].other(static_cast<int>(v))].position - at));
    };
    std::sort(vr.edges.begin(), vr.edges.end(), [&](int a, int b) {
      double aa = angle(a), bb = angle(b);
      return aa != bb ? aa < bb : a < b;
    });
  }
  return out;
}

}  // namespace

BoardGraph dual(const BoardGraph& graph) {
  if (graph.cells.size() < 2) fail(ErrorCode::TooFewCells, "dual needs at least 2 cells");
  GraphParts parts;
  for (const auto& c : graph.cells) parts.points.push_back(c.centroid);
  for (const auto& e : graph.edges) {
    if (e.cells.size() == 2) parts.edges.push_back({e.cells[0], e.cells[1]});
  }
  BuildOptions options;
  options.allow_crossings = true;
  options.voids = find_voids(graph);
  return finish(assemble(std::move(parts), options), graph);
}

BoardGraph subdivide(const BoardGraph& graph, int min_sides) {
  if (min_sides < 1) fail(ErrorCode::InvalidDimension, "subdivide threshold must be at least 1");
  GraphParts parts = to_parts(graph);
  parts.cells.clear();
  parts.rings.clear();
  for (std::size_t c = 0; c < graph.cells.size(); ++c) {
    const auto& cyc = graph.cells[c].vertices;
    const bool ring = graph.is_concentric();
    if (static_cast<int>(cyc.size()) < min_sides) {
      parts.cells.push_back(cyc);
      if (ring) parts.rings.push_back(graph.rings[c]);
      continue;
    }
    const int hub = static_cast<int>(parts.points.size());
    parts.points.push_back(fan_hub(graph.cell_polygon(static_cast<int>(c))));
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      parts.cells.push_back({cyc[k], cyc[(k + 1) % cyc.size()], hub});
      if (ring) parts.rings.push_back(graph.rings[c]);
    }
  }
  return finish(assemble(std::move(parts), given()), graph);
}

BoardGraph merge(const BoardGraph& a, const BoardGraph& b) {
  GraphParts parts = to_parts(a);
  parts.cells.clear();
  parts.rings.clear();
  const int offset = static_cast<int>(parts.points.size());
  for (const auto& v : b.vertices) parts.points.push_back(v.position);
  for (const auto& e : b.edges) parts.edges.push_back({e.v0 + offset, e.v1 + offset});
  BuildOptions options;
  // Inputs that already cross themselves (e.g. completed boards) stay permissive.
  options.allow_crossings = has_crossings(a) || has_crossings(b);
  options.overlap_error = true;
  options.voids = find_voids(a);
  for (auto p : find_voids(b)) options.voids.push_back(p);
  return finish(assemble(std::move(parts), options), a);
}

BoardGraph intersect(const BoardGraph& a, const BoardGraph& b) {
  // Match a's vertices against b's by coincidence.
  std::vector<int> in_b(a.vertices.size(), -1);
  {
    std::vector<int> order(b.vertices.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return b.vertices[x].position.x < b.vertices[y].position.x; });
    std::vector<double> xs;
    for (int i : order) xs.push_back(b.vertices[i].position.x);
    for (std::size_t v = 0; v < a.vertices.size(); ++v) {
      const Point2 p = a.vertices[v].position;
      auto lo = std::lower_bound(xs.begin(), xs.end(), p.x - kMergeEps);
      for (auto it = lo; it != xs.end() && *it <= p.x + kMergeEps; ++it) {
        int w = order[it - xs.begin()];
        if (coincident(p, b.vertices[w].position)) {
          in_b[v] = w;
          break;
        }
      }
    }
  }
  GraphParts parts;
  std::vector<int> remap(a.vertices.size(), -1);
  for (std::size_t v = 0; v < a.vertices.size(); ++v) {
    if (in_b[v] < 0) continue;
    remap[v] = static_cast<int>(parts.points.size());
    parts.points.push_back(a.vertices[v].position);
  }
  for (const auto& e : a.edges) {
    if (in_b[e.v0] < 0 || in_b[e.v1] < 0) continue;
    if (!b.find_edge(in_b[e.v0], in_b[e.v1])) continue;
    parts.edges.push_back({remap[e.v0], remap[e.v1]});
  }
  BuildOptions options;
  options.allow_crossings = true;
  options.voids = find_voids(a);
  for (auto p : find_voids(b)) options.voids.push_back(p);
  BoardGraph out = finish(assemble(std::move(parts), options), a);
  if (out.vertices.empty()) out.warnings.push_back("EmptyResult: the graphs share no vertices");
  return out;
}

BoardGraph remove_elements(const BoardGraph& graph, const std::vector<ElementId>& elements) {
  std::vector<char> drop_v(graph.vertices.size(), 0), drop_e(graph.edges.size(), 0), drop_c(graph.cells.size(), 0);
  for (const auto& id : elements) {
    if (!graph.valid(id)) fail(ErrorCode::InvalidElement, "no such element " + to_string(id));
    switch (id.type) {
      case SiteType::Vertex: drop_v[id.index] = 1; break;
      case SiteType::Edge: drop_e[id.index] = 1; break;
      case SiteType::Cell: drop_c[id.index] = 1; break;
    }
  }
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    if (!drop_v[v]) continue;
    for (int e : graph.vertices[v].edges) drop_e[e] = 1;
    for (int c : graph.vertices[v].cells) drop_c[c] = 1;
  }
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    if (!drop_e[e]) continue;
    for (int c : graph.edges[e].cells) drop_c[c] = 1;
  }
  GraphParts parts;
  std::vector<int> remap(graph.vertices.size(), -1);
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    if (drop_v[v]) continue;
    remap[v] = static_cast<int>(parts.points.size());
    parts.points.push_back(graph.vertices[v].position);
  }
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    if (!drop_e[e]) parts.edges.push_back({remap[graph.edges[e].v0], remap[graph.edges[e].v1]});
  }
  for (std::size_t c = 0; c < graph.cells.size(); ++c) {
    if (drop_c[c]) continue;
    std::vector<int> cyc;
    for (int v : graph.cells[c].vertices) cyc.push_back(remap[v]);
    parts.cells.push_back(std::move(cyc));
    if (graph.is_concentric()) parts.rings.push_back(graph.rings[c]);
  }
  return finish(assemble(std::move(parts), given()), graph);
}

BoardGraph add_elements(const BoardGraph& graph, const std::vector<Point2>& vertices,
                        const std::vector<std::pair<int, int>>& edges) {
  GraphParts parts = to_parts(graph);
  parts.cells.clear();
  parts.rings.clear();
  const int total = static_cast<int>(parts.points.size() + vertices.size());
  for (auto p : vertices) parts.points.push_back(p);
  for (auto [x, y] : edges) {
    if (x < 0 || y < 0 || x >= total || y >= total) {
      fail(ErrorCode::InvalidElement, "added edge references vertex outside 0.." + std::to_string(total - 1));
    }
    parts.edges.push_back({x, y});
  }
  BuildOptions options;
  options.allow_crossings = has_crossings(graph);
  options.voids = find_voids(graph);
  return finish(assemble(std::move(parts), options), graph);
}

BoardGraph complete(const BoardGraph& graph) {
  const int n = static_cast<int>(graph.vertices.size());
  if (n > kCompleteVertexLimit) {
    fail(ErrorCode::TooManyVertices,
         "complete refuses " + std::to_string(n) + " vertices (limit " + std::to_string(kCompleteVertexLimit) + ")");
  }
  GraphParts parts = to_parts(graph);
  parts.cells.clear();
  parts.rings.clear();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (graph.find_edge(i, j)) continue;
      const Point2 p = graph.vertices[i].position, q = graph.vertices[j].position;
      // A segment through a third vertex is already covered by the two shorter links.
      bool blocked = false;
      for (int k = 0; k < n && !blocked; ++k) {
        blocked = k != i && k != j && on_segment_interior(graph.vertices[k].position, p, q);
      }
      if (!blocked) parts.edges.push_back({i, j});
    }
  }
  BuildOptions options;
  options.allow_crossings = true;
  options.voids = find_voids(graph);
  return finish(assemble(std::move(parts), options), graph);
}

BoardGraph rotate(const BoardGraph& graph, double degrees) {
  const double a = degrees * kPi / 180.0;
  const double c = std::cos(a), s = std::sin(a);
  return apply_affine(graph, c, -s, s, c, bbox_centre(graph), {0, 0});
}

BoardGraph scale(const BoardGraph& graph, double sx, double sy) {
  if (sx == 0 || sy == 0) fail(ErrorCode::SingularTransform, "scale factors must be nonzero");
  return apply_affine(graph, sx, 0, 0, sy, bbox_centre(graph), {0, 0});
}

BoardGraph shift(const BoardGraph& graph, double dx, double dy) {
  return apply_affine(graph, 1, 0, 0, 1, {0, 0}, {dx, dy});
}

BoardGraph skew(const BoardGraph& graph, double amount) {
  return apply_affine(graph, 1, amount, 0, 1, bbox_centre(graph), {0, 0});
}

BoardGraph trim(const BoardGraph& graph) {
  const std::size_t nv = graph.vertices.size();
  std::vector<int> degree(nv);
  std::vector<char> dead_v(nv, 0), dead_e(graph.edges.size(), 0);
  std::vector<int> stack;
  for (std::size_t v = 0; v < nv; ++v) {
    degree[v] = static_cast<int>(graph.vertices[v].edges.size());
    if (degree[v] <= 1) stack.push_back(static_cast<int>(v));
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (dead_v[v]) continue;
    dead_v[v] = 1;
    for (int e : graph.vertices[v].edges) {
      if (dead_e[e]) continue;
      dead_e[e] = 1;
      int w = graph.edges[e].other(v);
      if (--degree[w] <= 1 && !dead_v[w]) stack.push_back(w);
    }
  }
  std::vector<ElementId> doomed;
  for (std::size_t v = 0; v < nv; ++v) {
    if (dead_v[v]) doomed.push_back({SiteType::Vertex, static_cast<int>(v)});
  }
  if (doomed.empty()) return renumber(graph);
  return remove_elements(graph, doomed);
}

BoardGraph renumber(const BoardGraph& graph) { return finish(assemble(to_parts(graph), given()), graph); }

BoardGraph make_faces(const BoardGraph& graph) { return infer_faces(graph); }

}  // namespace boardforge
