#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boardforge/geometry.hpp"
#include "boardforge/types.hpp"

namespace boardforge {

struct Analysis;

struct VertexRec {
  Point2 position;
  std::vector<int> edges;  // counter-clockwise by outgoing angle
  std::vector<int> cells;  // ascending
};

struct EdgeRec {
  int v0 = 0;  // v0 < v1
  int v1 = 0;
  std::vector<int> cells;  // ascending, at most two

  int other(int v) const { return v == v0 ? v1 : v0; }
};

struct CellRec {
  std::vector<int> vertices;  // counter-clockwise, starting at the lowest index
  std::vector<int> edges;     // edges[i] joins vertices[i] and vertices[i+1]
  Point2 centroid;
};

/// Ring/sector address of a cell on a concentric board. Sector indices grow counter-clockwise.
struct RingSector {
  int ring = 0;
  int sector = 0;
  int sectors = 1;  // sector count of this ring
  bool operator==(const RingSector&) const = default;
};

/// The analyzed board: vertices, edges and cells with mutual cross-references.
///
/// Element arrays are plain data so that builders and tests can inspect them;
/// once `analysis` is attached the graph is treated as immutable and shared.
struct BoardGraph {
  std::vector<VertexRec> vertices;
  std::vector<EdgeRec> edges;
  std::vector<CellRec> cells;
  SiteType default_site = SiteType::Cell;
  /// Per-cell ring layout, present only for concentric boards.
  std::vector<RingSector> rings;
  /// Non-fatal diagnostics from the operator that produced this graph.
  std::vector<std::string> warnings;
  std::shared_ptr<const Analysis> analysis;

  int count(SiteType t) const;
  /// Vertex position, edge midpoint or cell centroid.
  Point2 position(ElementId id) const;
  std::vector<Point2> cell_polygon(int cell) const;
  bool valid(ElementId id) const { return id.index >= 0 && id.index < count(id.type); }
  /// Index of the edge joining two vertices, if any.
  std::optional<int> find_edge(int a, int b) const;
  bool is_concentric() const { return !rings.empty(); }
};

/// Explicit construction input. Cells are vertex-index cycles in either orientation.
struct GraphParts {
  std::vector<Point2> points;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> cells;
  std::vector<RingSector> rings;  // empty, or one per entry of `cells`
};

enum class FaceMode {
  Given,  // use GraphParts::cells verbatim
  Infer,  // enumerate bounded faces of the embedding
};

struct BuildOptions {
  FaceMode faces = FaceMode::Infer;
  /// Crossing edges are kept but no face is inferred across them.
  bool allow_crossings = false;
  /// Interior points of bounded regions that must not become cells.
  std::vector<Point2> voids;
  /// Error raised for crossings when they are not allowed.
  bool overlap_error = false;
};

/// Freeform construction: merges coincident points, dedupes edges, infers faces,
/// and numbers every element canonically.
BoardGraph build_graph(const std::vector<Point2>& positions, const std::vector<std::pair<int, int>>& edges);

/// General entry used by generators and operators.
BoardGraph assemble(GraphParts parts, const BuildOptions& options);

/// Re-enumerates the faces of the graph's skeleton; every bounded face becomes a cell.
BoardGraph infer_faces(const BoardGraph& graph);

/// Interior points of bounded faces of the skeleton that are not cells.
std::vector<Point2> find_voids(const BoardGraph& graph);

/// Skeleton plus cells as explicit parts (inverse of assemble with FaceMode::Given).
GraphParts to_parts(const BoardGraph& graph);

enum class ViolationKind {
  InvalidIndex,
  DegenerateEdge,
  DegenerateCell,
  CrossRefMismatch,
  AngularOrder,
  TooManyIncidentCells,
  NonPositiveArea,
  RepeatedVertex,
  BoundaryMismatch,
  CentroidMismatch,
  ContainsElement,
  NonFinitePosition,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  ElementId element;
  std::string detail;
};

/// Lists every broken structural invariant. Empty means the graph is well formed.
std::vector<Violation> validate(const BoardGraph& graph);

/// True when some pair of edges crosses or an edge passes through a vertex.
bool has_crossings(const BoardGraph& graph);

/// Number of connected components over vertices (via edges).
int component_count(const BoardGraph& graph);

/// Absolute area covered by cells.
double total_cell_area(const BoardGraph& graph);

}  // namespace boardforge
