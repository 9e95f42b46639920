#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "templia/box_counting.hpp"
#include "templia/grid.hpp"
#include "templia/symbolic_template.hpp"

namespace templia {

/// Fixed-template Mandelbrot set restricted to one c0, sampled over the c1 plane.
struct MandelSliceRaster {
  EscapeGrid cells;  // -1: orbit of 0 bounded
  ComplexPoint fixed_c0;
  std::string template_descriptor;
  std::size_t max_iter = 0;

  const GridSpec& grid() const { return cells.grid(); }
};

/// Classifies the orbit of 0 for (c0, c1 = pixel center) with R = R(c0, c1).
/// OpenMP-parallel over rows.
MandelSliceRaster mandel_slice(const SymbolicTemplate& t, ComplexPoint c0, const GridSpec& grid,
                               std::size_t max_iter);
MandelSliceRaster mandel_slice_serial(const SymbolicTemplate& t, ComplexPoint c0, const GridSpec& grid,
                                      std::size_t max_iter);

/// c1 in [-2, 2]^2 at 512x512.
GridSpec default_slice_grid();

/// Inclusive arithmetic range lo, lo + step, ..., hi.
struct LatticeAxis {
  double lo = 0.0;
  double step = 0.2;
  double hi = 0.0;

  /// Throws std::invalid_argument on step <= 0 or hi < lo.
  std::vector<double> values() const;
};

struct LatticeSlice {
  ComplexPoint c0;
  MandelSliceRaster slice;
};

/// One slice per c0 = re + im*i; imaginary rows outermost, real values
/// innermost, both ascending.
std::vector<LatticeSlice> slice_lattice(const SymbolicTemplate& t, const LatticeAxis& re, const LatticeAxis& im,
                                        const GridSpec& grid, std::size_t max_iter);

struct ZoomLevel {
  MandelSliceRaster slice;
  std::optional<DimensionEstimate> dimension;  // boundary box-counting estimate
  std::string error;                           // set when the estimate failed
};

struct ZoomResult {
  std::vector<ZoomLevel> levels;
  std::vector<std::string> warnings;  // windows not nested in their predecessor
};

ZoomResult zoom_sequence(const SymbolicTemplate& t, ComplexPoint c0, const std::vector<GridSpec>& windows,
                         std::size_t max_iter);

}  // namespace templia
