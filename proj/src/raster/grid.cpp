#include "templia/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace templia {

GridSpec GridSpec::checked(ComplexPoint center, double width, double height, int pixels_x, int pixels_y) {
  center = ComplexPoint::checked(center.re, center.im);
  if (!(std::isfinite(width) && width > 0.0) || !(std::isfinite(height) && height > 0.0)) {
    throw std::invalid_argument("grid width and height must be positive and finite");
  }
  if (pixels_x < 2 || pixels_y < 2) throw std::invalid_argument("grid needs at least 2 pixels per axis");
  GridSpec g{center, width, height, pixels_x, pixels_y};
  if (!(g.pixel_width() > 0.0) || !(g.pixel_height() > 0.0)) {
    throw std::invalid_argument("grid pixel size underflows");
  }
  return g;
}

GridSpec GridSpec::default_for_radius(double radius, int pixels) {
  const double side = 2.0 * radius + 0.2;
  return checked({0.0, 0.0}, side, side, pixels, pixels);
}

std::optional<GridSpec::Pixel> GridSpec::pixel_of(ComplexPoint z) const {
  const double fx = (z.re - (center.re - 0.5 * width)) / pixel_width();
  const double fy = ((center.im + 0.5 * height) - z.im) / pixel_height();
  if (!(fx >= 0.0 && fy >= 0.0)) return std::nullopt;
  const double x = std::floor(fx);
  const double y = std::floor(fy);
  if (x >= pixels_x || y >= pixels_y) return std::nullopt;
  return Pixel{static_cast<int>(x), static_cast<int>(y)};
}

bool GridSpec::contains(const GridSpec& inner) const {
  return inner.center.re - 0.5 * inner.width >= center.re - 0.5 * width &&
         inner.center.re + 0.5 * inner.width <= center.re + 0.5 * width &&
         inner.center.im - 0.5 * inner.height >= center.im - 0.5 * height &&
         inner.center.im + 0.5 * inner.height <= center.im + 0.5 * height;
}

std::size_t EscapeGrid::bounded_count() const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), kBounded));
}

}  // namespace templia
