#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "templia/boundary.hpp"

namespace templia {

struct BoxCount {
  double epsilon;
  std::size_t count;
};

struct DimensionEstimate {
  double dimension = 0.0;       // least-squares slope of log N against log(1/eps)
  std::vector<BoxCount> table;  // largest scale first
};

/// Box counts at `levels` geometrically spaced sizes from max_scale down to
/// min_scale, boxes anchored at the lower-left corner of the point cloud.
/// Throws std::invalid_argument on bad scales, levels < 3, no points, or when
/// every count is equal (the regression is degenerate).
DimensionEstimate box_counting_dimension(std::span<const ComplexPoint> points, double min_scale,
                                         double max_scale, int levels);

/// As above; additionally requires max_scale to fit in the source window.
DimensionEstimate box_counting_dimension(const BoundaryPointSet& points, double min_scale, double max_scale,
                                         int levels);

/// 2 pixels up to 1/8 of the window, 6 levels.
DimensionEstimate box_counting_dimension(const BoundaryPointSet& points);

}  // namespace templia
