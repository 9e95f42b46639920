#include "templia/mandel_slice.hpp"

#include <cmath>
#include <stdexcept>

#include "templia/boundary.hpp"
#include "templia/orbit.hpp"

namespace templia {

namespace {

void slice_row(MandelSliceRaster& r, std::span<const Bit> symbols, int y) {
  const GridSpec& g = r.grid();
  for (int x = 0; x < g.pixels_x; ++x) {
    const ParameterPair pair{r.fixed_c0, g.pixel_center(x, y)};
    const double radius = escape_radius(pair);
    r.cells.at(x, y) = escape_index({0.0, 0.0}, pair, symbols, radius * radius);
  }
}

MandelSliceRaster prepare(const SymbolicTemplate& t, ComplexPoint c0, const GridSpec& grid,
                          std::size_t max_iter, BitWord& symbols) {
  if (max_iter < 1) throw std::invalid_argument("mandel slice needs max_iter >= 1");
  symbols = t.prefix(max_iter);
  return MandelSliceRaster{EscapeGrid(grid), ComplexPoint::checked(c0.re, c0.im), t.descriptor(), max_iter};
}

}  // namespace

MandelSliceRaster mandel_slice(const SymbolicTemplate& t, ComplexPoint c0, const GridSpec& grid,
                               std::size_t max_iter) {
  BitWord symbols;
  MandelSliceRaster r = prepare(t, c0, grid, max_iter, symbols);
  const int rows = grid.pixels_y;
#pragma omp parallel for schedule(dynamic, 4)
  for (int y = 0; y < rows; ++y) slice_row(r, symbols, y);
  return r;
}

MandelSliceRaster mandel_slice_serial(const SymbolicTemplate& t, ComplexPoint c0, const GridSpec& grid,
                                      std::size_t max_iter) {
  BitWord symbols;
  MandelSliceRaster r = prepare(t, c0, grid, max_iter, symbols);
  for (int y = 0; y < grid.pixels_y; ++y) slice_row(r, symbols, y);
  return r;
}

GridSpec default_slice_grid() { return GridSpec::checked({0.0, 0.0}, 4.0, 4.0, 512, 512); }

std::vector<double> LatticeAxis::values() const {
  if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("lattice step must be positive");
  if (!(hi >= lo)) throw std::invalid_argument("lattice range is empty");
  // Tolerate the representation error of decimal steps such as 0.2.
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = lo + static_cast<double>(i) * step;
  return out;
}

std::vector<LatticeSlice> slice_lattice(const SymbolicTemplate& t, const LatticeAxis& re, const LatticeAxis& im,
                                        const GridSpec& grid, std::size_t max_iter) {
  const std::vector<double> res = re.values();
  const std::vector<double> ims = im.values();
  std::vector<LatticeSlice> out;
  out.reserve(res.size() * ims.size());
  for (double b : ims) {
    for (double a : res) {
      const ComplexPoint c0{a, b};
      out.push_back({c0, mandel_slice(t, c0, grid, max_iter)});
    }
  }
  return out;
}

ZoomResult zoom_sequence(const SymbolicTemplate& t, ComplexPoint c0, const std::vector<GridSpec>& windows,
                         std::size_t max_iter) {
  if (windows.empty()) throw std::invalid_argument("zoom sequence needs at least one window");
  ZoomResult out;
  for (std::size_t i = 0; i < windows.size(); ++i) {
    if (i > 0 && !windows[i - 1].contains(windows[i])) {
      out.warnings.push_back("window " + std::to_string(i) + " is not contained in window " + std::to_string(i - 1));
    }
    ZoomLevel level{mandel_slice(t, c0, windows[i], max_iter), std::nullopt, {}};
    try {
      level.dimension = box_counting_dimension(extract_boundary(level.slice.cells, WindowEdge::Interior));
    } catch (const std::invalid_argument& e) {
      level.error = e.what();
    }
    out.levels.push_back(std::move(level));
  }
  return out;
}

}  // namespace templia
