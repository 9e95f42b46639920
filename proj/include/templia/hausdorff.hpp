#pragma once

#include <span>

#include "templia/boundary.hpp"

namespace templia {

/// sup_{a in A} inf_{b in B} |a - b|. Exact; nearest neighbours are found
/// through a uniform bucket grid, and the outer loop is OpenMP-parallel.
double directed_hausdorff(std::span<const ComplexPoint> from, std::span<const ComplexPoint> to);

/// Symmetric Hausdorff distance. Throws std::invalid_argument on an empty set.
double hausdorff_distance(std::span<const ComplexPoint> a, std::span<const ComplexPoint> b);
double hausdorff_distance(const BoundaryPointSet& a, const BoundaryPointSet& b);

/// O(|A||B|) reference.
double hausdorff_distance_brute(std::span<const ComplexPoint> a, std::span<const ComplexPoint> b);

}  // namespace templia
