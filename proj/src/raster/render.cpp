#include "templia/raster.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

#include "templia/orbit.hpp"

namespace templia {

namespace {

ClassifiedRaster prepare(const ParameterPair& pair, const SymbolicTemplate& t, const GridSpec& grid,
                         std::size_t max_iter, BitWord& symbols) {
  if (max_iter < 1) throw std::invalid_argument("render needs max_iter >= 1");
  symbols = t.prefix(max_iter);
  return ClassifiedRaster{EscapeGrid(grid), max_iter, pair, t.descriptor(), std::vector<double>(grid.pixel_count())};
}

void render_row(ClassifiedRaster& r, std::span<const Bit> symbols, double radius_sq, int y) {
  const GridSpec& g = r.grid();
  for (int x = 0; x < g.pixels_x; ++x) {
    const EscapeSample e = escape_with_distance(g.pixel_center(x, y), r.pair, symbols, radius_sq);
    r.cells.at(x, y) = e.index;
    r.distance_bound[r.cells.index(x, y)] = e.distance_bound;
  }
}

}  // namespace

bool ClassifiedRaster::near_set(int x, int y) const {
  if (cells.bounded(x, y)) return false;
  const double half_pixel = 0.5 * std::min(grid().pixel_width(), grid().pixel_height());
  return distance_bound[cells.index(x, y)] <= half_pixel;
}

ClassifiedRaster render_julia(const ParameterPair& pair, const SymbolicTemplate& t, const GridSpec& grid,
                              std::size_t max_iter) {
  BitWord symbols;
  ClassifiedRaster r = prepare(pair, t, grid, max_iter, symbols);
  const double radius = escape_radius(pair);
  const double radius_sq = radius * radius;
  const int rows = grid.pixels_y;
#pragma omp parallel for schedule(dynamic, 4)
  for (int y = 0; y < rows; ++y) render_row(r, symbols, radius_sq, y);
  return r;
}

ClassifiedRaster render_julia_serial(const ParameterPair& pair, const SymbolicTemplate& t,
                                     const GridSpec& grid, std::size_t max_iter) {
  BitWord symbols;
  ClassifiedRaster r = prepare(pair, t, grid, max_iter, symbols);
  const double radius = escape_radius(pair);
  for (int y = 0; y < grid.pixels_y; ++y) render_row(r, symbols, radius * radius, y);
  return r;
}

void set_thread_count(int n) {
  if (n < 1) throw std::invalid_argument("thread count must be >= 1");
  omp_set_num_threads(n);
}

int thread_count() { return omp_get_max_threads(); }

}  // namespace templia
