#include "templia/boundary.hpp"

namespace templia {

BoundaryPointSet extract_boundary(const EscapeGrid& cells, WindowEdge edge_rule) {
  BoundaryPointSet out;
  out.source_grid = cells.grid();
  const int w = cells.width();
  const int h = cells.height();
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!cells.bounded(x, y)) continue;
      const auto escapes = [&](int nx, int ny) {
        if (nx < 0 || ny < 0 || nx >= w || ny >= h) return edge_rule == WindowEdge::Escape;
        return !cells.bounded(nx, ny);
      };
      if (escapes(x - 1, y) || escapes(x + 1, y) || escapes(x, y - 1) || escapes(x, y + 1)) {
        out.points.push_back(cells.grid().pixel_center(x, y));
      }
    }
  }
  return out;
}

}  // namespace templia
