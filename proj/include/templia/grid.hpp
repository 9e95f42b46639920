#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "templia/complex_point.hpp"

namespace templia {

/// Sampling window over the complex plane. Pixel (x, y) has y = 0 at the top
/// row; the imaginary axis increases upward.
struct GridSpec {
  ComplexPoint center;
  double width = 4.0;
  double height = 4.0;
  int pixels_x = 512;
  int pixels_y = 512;

  /// Throws std::invalid_argument when sizes are non-positive, non-finite or
  /// fewer than two pixels per axis.
  static GridSpec checked(ComplexPoint center, double width, double height, int pixels_x, int pixels_y);

  /// Square window centered at 0 with side 2R + 0.2, 512x512.
  static GridSpec default_for_radius(double radius, int pixels = 512);

  double pixel_width() const { return width / pixels_x; }
  double pixel_height() const { return height / pixels_y; }
  std::size_t pixel_count() const { return static_cast<std::size_t>(pixels_x) * static_cast<std::size_t>(pixels_y); }

  ComplexPoint pixel_center(int x, int y) const {
    return {center.re - 0.5 * width + (x + 0.5) * pixel_width(),
            center.im + 0.5 * height - (y + 0.5) * pixel_height()};
  }

  struct Pixel {
    int x;
    int y;
  };
  /// The pixel whose cell contains z, if z lies inside the window.
  std::optional<Pixel> pixel_of(ComplexPoint z) const;

  /// True when `inner` lies entirely inside this window.
  bool contains(const GridSpec& inner) const;

  bool operator==(const GridSpec&) const = default;
};

/// Escape indices in row-major order (top row first); -1 marks a bounded
/// (prisoner) pixel.
class EscapeGrid {
 public:
  static constexpr std::int32_t kBounded = -1;

  EscapeGrid() = default;
  explicit EscapeGrid(GridSpec grid) : grid_(grid), cells_(grid.pixel_count(), kBounded) {}

  const GridSpec& grid() const { return grid_; }
  int width() const { return grid_.pixels_x; }
  int height() const { return grid_.pixels_y; }

  std::int32_t at(int x, int y) const { return cells_[index(x, y)]; }
  std::int32_t& at(int x, int y) { return cells_[index(x, y)]; }
  bool bounded(int x, int y) const { return at(x, y) == kBounded; }

  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(grid_.pixels_x) + static_cast<std::size_t>(x);
  }

  const std::vector<std::int32_t>& cells() const { return cells_; }
  std::vector<std::int32_t>& cells() { return cells_; }

  std::size_t bounded_count() const;

  bool operator==(const EscapeGrid&) const = default;

 private:
  GridSpec grid_;
  std::vector<std::int32_t> cells_;
};

}  // namespace templia
