#include "templia/hybrid.hpp"

#include <stdexcept>

#include "templia/orbit.hpp"

namespace templia {

namespace {

std::uint64_t count_bounded(ComplexPoint z, const ParameterPair& pair, double radius_sq, std::size_t remaining) {
  if (remaining == 0) return 1;
  std::uint64_t total = 0;
  for (unsigned s = 0; s < 2; ++s) {
    const ComplexPoint next = step(z, pair.select(s));
    if (next.norm_sq() > radius_sq) continue;
    total += count_bounded(next, pair, radius_sq, remaining - 1);
  }
  return total;
}

void check_exact_length(std::size_t length) {
  if (length < 1 || length > kHybridExactMaxLength) {
    throw std::invalid_argument("exact hybrid enumeration needs 1 <= L <= " + std::to_string(kHybridExactMaxLength));
  }
}

}  // namespace

std::uint64_t hybrid_count_exact(ComplexPoint c0, ComplexPoint c1, std::size_t length) {
  check_exact_length(length);
  const ParameterPair pair{c0, c1};
  const double radius = escape_radius(pair);
  return count_bounded({0.0, 0.0}, pair, radius * radius, length);
}

std::uint64_t hybrid_count_brute(ComplexPoint c0, ComplexPoint c1, std::size_t length) {
  check_exact_length(length);
  const ParameterPair pair{c0, c1};
  const double radius = escape_radius(pair);
  std::uint64_t total = 0;
  BitWord word(length);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << length); ++code) {
    for (std::size_t i = 0; i < length; ++i) word[i] = static_cast<Bit>((code >> i) & 1U);
    if (escape_index({0.0, 0.0}, pair, word, radius * radius) < 0) ++total;
  }
  return total;
}

std::vector<BitWord> hybrid_sample_words(std::uint64_t seed, std::size_t samples, std::size_t length) {
  std::vector<BitWord> words(samples);
  for (std::size_t j = 0; j < samples; ++j) words[j] = random_word(splitmix64_at(seed, j), length, 0.5);
  return words;
}

HybridRaster hybrid_mandelbrot(ComplexPoint c0, const GridSpec& grid, std::size_t length, HybridExact) {
  check_exact_length(length);
  HybridRaster out{grid, c0, length, true, 0, 0, std::uint64_t{1} << length,
                   std::vector<std::uint64_t>(grid.pixel_count())};
  const int rows = grid.pixels_y;
#pragma omp parallel for schedule(dynamic, 1)
  for (int y = 0; y < rows; ++y) {
    for (int x = 0; x < grid.pixels_x; ++x) {
      out.counts[static_cast<std::size_t>(y) * grid.pixels_x + x] =
          hybrid_count_exact(c0, grid.pixel_center(x, y), length);
    }
  }
  return out;
}

HybridRaster hybrid_mandelbrot(ComplexPoint c0, const GridSpec& grid, std::size_t length,
                               const HybridMonteCarlo& mode) {
  if (length < 1) throw std::invalid_argument("hybrid count needs L >= 1");
  if (mode.samples < 1) throw std::invalid_argument("Monte Carlo hybrid needs at least one sample");
  const std::vector<BitWord> words = hybrid_sample_words(mode.seed, mode.samples, length);
  HybridRaster out{grid, c0, length, false, mode.samples, mode.seed, mode.samples,
                   std::vector<std::uint64_t>(grid.pixel_count())};
  const int rows = grid.pixels_y;
#pragma omp parallel for schedule(dynamic, 1)
  for (int y = 0; y < rows; ++y) {
    for (int x = 0; x < grid.pixels_x; ++x) {
      const ParameterPair pair{c0, grid.pixel_center(x, y)};
      const double radius = escape_radius(pair);
      std::uint64_t bounded = 0;
      for (const BitWord& w : words) {
        if (escape_index({0.0, 0.0}, pair, w, radius * radius) < 0) ++bounded;
      }
      out.counts[static_cast<std::size_t>(y) * grid.pixels_x + x] = bounded;
    }
  }
  return out;
}

}  // namespace templia
