#include "templia/box_counting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

namespace templia {

DimensionEstimate box_counting_dimension(std::span<const ComplexPoint> points, double min_scale,
                                         double max_scale, int levels) {
  if (points.empty()) throw std::invalid_argument("box counting needs at least one point");
  if (levels < 3) throw std::invalid_argument("box counting needs at least 3 levels");
  if (!(min_scale > 0.0 && min_scale < max_scale) || !std::isfinite(max_scale)) {
    throw std::invalid_argument("box counting needs 0 < min_scale < max_scale");
  }
  double x0 = points[0].re;
  double y0 = points[0].im;
  for (const auto& p : points) {
    x0 = std::min(x0, p.re);
    y0 = std::min(y0, p.im);
  }

  DimensionEstimate est;
  const double ratio = std::pow(min_scale / max_scale, 1.0 / (levels - 1));
  std::unordered_set<std::uint64_t> boxes;
  for (int level = 0; level < levels; ++level) {
    const double eps = level == levels - 1 ? min_scale : max_scale * std::pow(ratio, level);
    boxes.clear();
    for (const auto& p : points) {
      const auto bx = static_cast<std::uint64_t>(std::floor((p.re - x0) / eps));
      const auto by = static_cast<std::uint64_t>(std::floor((p.im - y0) / eps));
      boxes.insert((bx << 32) ^ by);
    }
    est.table.push_back({eps, boxes.size()});
  }

  const bool all_equal = std::all_of(est.table.begin(), est.table.end(),
                                     [&](const BoxCount& b) { return b.count == est.table.front().count; });
  if (all_equal) throw std::invalid_argument("box counts are identical at every scale; slope undefined");

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& b : est.table) {
    const double lx = std::log(1.0 / b.epsilon);
    const double ly = std::log(static_cast<double>(b.count));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(est.table.size());
  est.dimension = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return est;
}

DimensionEstimate box_counting_dimension(const BoundaryPointSet& points, double min_scale, double max_scale,
                                         int levels) {
  if (points.source_grid) {
    const double window = std::max(points.source_grid->width, points.source_grid->height);
    if (max_scale > window) throw std::invalid_argument("box counting max_scale exceeds the window size");
  }
  return box_counting_dimension(std::span<const ComplexPoint>(points.points), min_scale, max_scale, levels);
}

DimensionEstimate box_counting_dimension(const BoundaryPointSet& points) {
  if (!points.source_grid) throw std::invalid_argument("default box-counting scales need a source grid");
  const GridSpec& g = *points.source_grid;
  const double pixel = std::max(g.pixel_width(), g.pixel_height());
  const double window = std::min(g.width, g.height);
  return box_counting_dimension(points, 2.0 * pixel, window / 8.0, 6);
}

}  // namespace templia
