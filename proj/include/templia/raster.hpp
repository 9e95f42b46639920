#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "templia/grid.hpp"
#include "templia/symbolic_template.hpp"

namespace templia {

/// Template prisoner/escape classification of a window of initial points.
struct ClassifiedRaster {
  EscapeGrid cells;
  std::size_t max_iter = 0;
  ParameterPair pair;
  std::string template_descriptor;
  /// Per-pixel exterior distance estimate (row-major); 0 for prisoners.
  std::vector<double> distance_bound;

  const GridSpec& grid() const { return cells.grid(); }
  bool prisoner(int x, int y) const { return cells.bounded(x, y); }

  /// Escaping pixel whose distance estimate is within half a pixel: its cell
  /// meets the filled set even though the center escapes.
  bool near_set(int x, int y) const;
};

/// Classifies every pixel center by its template orbit under R = escape_radius
/// and records the exterior distance estimate of escaping centers.
/// OpenMP-parallel over rows; the result does not depend on the thread count.
/// Throws std::out_of_range when a finite template is shorter than max_iter.
ClassifiedRaster render_julia(const ParameterPair& pair, const SymbolicTemplate& t, const GridSpec& grid,
                              std::size_t max_iter);

/// Single-threaded reference for render_julia.
ClassifiedRaster render_julia_serial(const ParameterPair& pair, const SymbolicTemplate& t,
                                     const GridSpec& grid, std::size_t max_iter);

/// Sets the OpenMP worker count used by the parallel kernels (n >= 1).
void set_thread_count(int n);
int thread_count();

}  // namespace templia
