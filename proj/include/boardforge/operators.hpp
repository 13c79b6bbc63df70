#pragma once

#include <utility>
#include <vector>

#include "boardforge/graph.hpp"

namespace boardforge {

/// Weak dual: one vertex per cell centroid, one edge per pair of cells sharing an edge.
BoardGraph dual(const BoardGraph& graph);

/// Fans every cell with at least `min_sides` sides into triangles around its centroid.
BoardGraph subdivide(const BoardGraph& graph, int min_sides = 1);

/// Superposition with coincident vertices unified and faces re-inferred. Also `union`.
BoardGraph merge(const BoardGraph& a, const BoardGraph& b);

/// Vertices and edges present in both graphs.
BoardGraph intersect(const BoardGraph& a, const BoardGraph& b);

/// Deletes cells (keeping their edges), edges (and their cells) and vertices (and everything on them).
BoardGraph remove_elements(const BoardGraph& graph, const std::vector<ElementId>& elements);

/// Adds vertices and edges. Edge endpoints index the existing vertices followed by the new ones.
BoardGraph add_elements(const BoardGraph& graph, const std::vector<Point2>& vertices,
                        const std::vector<std::pair<int, int>>& edges);

/// Joins every pair of vertices with a straight edge. At most 64 vertices.
BoardGraph complete(const BoardGraph& graph);

/// Affine maps. Element numbering is kept; call renumber() to re-sort.
/// Rotation, scaling and skew pivot about the bounding-box centre.
BoardGraph rotate(const BoardGraph& graph, double degrees);
BoardGraph scale(const BoardGraph& graph, double sx, double sy);
BoardGraph shift(const BoardGraph& graph, double dx, double dy);
/// x' = x + amount * y.
BoardGraph skew(const BoardGraph& graph, double amount);

/// Repeatedly strips vertices of degree one or less.
BoardGraph trim(const BoardGraph& graph);

/// Canonical (y, x) numbering of all three element arrays.
BoardGraph renumber(const BoardGraph& graph);

/// Discards the cell list and re-infers every bounded face.
BoardGraph make_faces(const BoardGraph& graph);

inline constexpr int kCompleteVertexLimit = 64;

}  // namespace boardforge
