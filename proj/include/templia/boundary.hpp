#pragma once

#include <optional>
#include <vector>

#include "templia/grid.hpp"

namespace templia {

/// Pixel centers of a rasterized set boundary.
struct BoundaryPointSet {
  std::vector<ComplexPoint> points;
  std::optional<GridSpec> source_grid;

  bool empty() const { return points.empty(); }
  std::size_t size() const { return points.size(); }
};

/// How the raster frame is treated by extract_boundary.
enum class WindowEdge {
  Escape,   // the set fits in the window: frame pixels touch escape
  Interior  // the window crops the set: the frame is not boundary
};

/// Bounded pixels with an escaping 4-neighbour.
BoundaryPointSet extract_boundary(const EscapeGrid& cells, WindowEdge edge = WindowEdge::Escape);

}  // namespace templia
