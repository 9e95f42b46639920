#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "templia/grid.hpp"
#include "templia/symbolic_template.hpp"

namespace templia {

struct HybridExact {};
struct HybridMonteCarlo {
  std::size_t samples = 4096;
  std::uint64_t seed = 0;
};

/// Per-c1 count of length-L templates whose orbit of 0 stays bounded.
struct HybridRaster {
  GridSpec grid;
  ComplexPoint fixed_c0;
  std::size_t length = 10;
  bool exact = true;
  std::size_t sample_count = 0;  // Monte Carlo only
  std::uint64_t seed = 0;        // Monte Carlo only
  std::uint64_t total_templates = 0;
  std::vector<std::uint64_t> counts;  // row-major, top row first

  std::uint64_t at(int x, int y) const {
    return counts[static_cast<std::size_t>(y) * static_cast<std::size_t>(grid.pixels_x) + static_cast<std::size_t>(x)];
  }
};

/// Largest L accepted by exact enumeration.
inline constexpr std::size_t kHybridExactMaxLength = 20;
/// Exact enumeration above this length is slow across a full image.
inline constexpr std::size_t kHybridExactCostWarningLength = 12;

/// Number of the 2^L words with a bounded orbit of 0, by depth-first search over
/// the prefix tree (escaped prefixes are pruned).
std::uint64_t hybrid_count_exact(ComplexPoint c0, ComplexPoint c1, std::size_t length);

/// The same count by iterating each word separately. Reference only: O(L 2^L).
std::uint64_t hybrid_count_brute(ComplexPoint c0, ComplexPoint c1, std::size_t length);

/// The shared Monte Carlo word set: word j is random_word(splitmix64_at(seed, j), L, 1/2).
std::vector<BitWord> hybrid_sample_words(std::uint64_t seed, std::size_t samples, std::size_t length);

/// Exact requires 1 <= L <= 20; Monte Carlo requires samples >= 1.
/// OpenMP-parallel over rows; counts do not depend on the thread count.
HybridRaster hybrid_mandelbrot(ComplexPoint c0, const GridSpec& grid, std::size_t length, HybridExact);
HybridRaster hybrid_mandelbrot(ComplexPoint c0, const GridSpec& grid, std::size_t length,
                               const HybridMonteCarlo& mode);

}  // namespace templia
