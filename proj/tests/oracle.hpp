#pragma once

// Brute-force reference for small regular boards. Shares no code with the library
// beyond the plain result types: cells are coordinate polygons, elements are matched
// by position, and every relation is decided by direct pairwise tests.

#include <array>
#include <string>
#include <vector>

#include "boardforge/graph.hpp"
#include "boardforge/relations.hpp"

namespace oracle {

struct Pt {
  double x = 0, y = 0;
};

using Poly = std::vector<Pt>;

/// Unit-edge cells of an n x n square board, lower-left corner at the origin.
std::vector<Poly> square_cells(int n);
/// Triangle of side n split into n^2 unit triangles.
std::vector<Poly> tri_cells(int n);
/// Pointy-top hexagons with n cells per side.
std::vector<Poly> hex_cells(int n);

/// Closed-form element counts {cells, vertices, edges}.
std::array<int, 3> square_counts(int n);
std::array<int, 3> tri_counts(int n);
std::array<int, 3> hex_counts(int n);

/// Relation lists for all three site types, indexed like `graph`.
/// Throws std::runtime_error when the polygons cannot be matched to the graph.
boardforge::RelationTable relations_for(const std::vector<Poly>& cells, const boardforge::BoardGraph& graph);

/// First difference between two tables, or an empty string when they agree.
std::string first_difference(const boardforge::RelationTable& expected, const boardforge::RelationTable& actual);

}  // namespace oracle
