#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "boardforge/graph.hpp"

namespace boardforge {

inline constexpr const char* kSchemaVersion = "1";

/// Serializes a board (with its analysis, computed if missing) as schema-ordered JSON.
std::string to_json(const BoardGraph& graph);

/// Rebuilds a board from exported JSON, keeping every element index. The analysis is recomputed.
BoardGraph from_json(std::string_view text);

struct SvgOptions {
  bool relations = false;
  bool radials = false;
  bool directions = false;
  std::optional<ElementId> focus;
};

std::string to_svg(const BoardGraph& graph, const SvgOptions& options = {});

/// Rounds to 9 decimals and folds negative zero.
double stable_number(double x);

}  // namespace boardforge
