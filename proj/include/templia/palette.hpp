#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

namespace templia {

using Rgb = std::array<std::uint8_t, 3>;

enum class PaletteKind { Grayscale, Spectrum };

/// Maps escape indices (or count fractions) to colors. Prisoner pixels get a
/// color that no escape index maps to.
struct Palette {
  std::string name;
  PaletteKind kind = PaletteKind::Spectrum;
  Rgb prisoner{0, 0, 0};

  /// "gray" or "spectrum"; throws std::invalid_argument otherwise.
  static Palette named(const std::string& name);

  /// Fraction in [0,1] to color. Spectrum runs blue (0) to red (1).
  Rgb fraction_color(double t) const;

  /// Escape index in [0, max_iter] to color; fast escapes are bright.
  Rgb escape_color(std::int64_t escape_index, std::size_t max_iter) const;
};

/// PGM value of an escape index: 255 - floor(254 * min(e, M-1) / (M-1)),
/// so escapes land in 1..255 and 0 is reserved for prisoners.
std::uint8_t escape_gray(std::int64_t escape_index, std::size_t max_iter);

}  // namespace templia
