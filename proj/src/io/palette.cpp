#include "templia/palette.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace templia {

std::uint8_t escape_gray(std::int64_t escape_index, std::size_t max_iter) {
  if (escape_index < 0) return 0;
  if (max_iter <= 1) return 255;
  const auto top = static_cast<std::int64_t>(max_iter - 1);
  const std::int64_t e = std::min(escape_index, top);
  return static_cast<std::uint8_t>(255 - (254 * e) / top);
}

Palette Palette::named(const std::string& name) {
  if (name == "gray") return Palette{name, PaletteKind::Grayscale, {0, 0, 0}};
  if (name == "spectrum") return Palette{name, PaletteKind::Spectrum, {0, 0, 0}};
  throw std::invalid_argument("unknown palette '" + name + "' (expected gray or spectrum)");
}

Rgb Palette::fraction_color(double t) const {
  t = std::clamp(t, 0.0, 1.0);
  if (kind == PaletteKind::Grayscale) {
    const auto v = static_cast<std::uint8_t>(1 + std::lround(254.0 * t));
    return {v, v, v};
  }
  // Hue 240 (blue) down to 0 (red) at full saturation and value.
  const double hue = 4.0 * (1.0 - t);  // in sextants
  const int sector = std::min(static_cast<int>(hue), 3);
  const auto ramp = static_cast<std::uint8_t>(std::lround(255.0 * (hue - sector)));
  const auto fall = static_cast<std::uint8_t>(255 - ramp);
  switch (sector) {
    case 0: return {255, ramp, 0};   // red -> yellow
    case 1: return {fall, 255, 0};   // yellow -> green
    case 2: return {0, 255, ramp};   // green -> cyan
    default: return {0, fall, 255};  // cyan -> blue
  }
}

Rgb Palette::escape_color(std::int64_t escape_index, std::size_t max_iter) const {
  if (escape_index < 0) return prisoner;
  if (kind == PaletteKind::Grayscale) {
    const std::uint8_t v = escape_gray(escape_index, max_iter);
    return {v, v, v};
  }
  if (max_iter <= 1) return fraction_color(0.0);
  const auto top = static_cast<double>(max_iter - 1);
  return fraction_color(std::min(static_cast<double>(escape_index), top) / top);
}

}  // namespace templia
