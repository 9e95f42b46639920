#include "templia/fixed_map.hpp"

#include <stdexcept>

#include "templia/orbit.hpp"
#include "templia/symbolic_template.hpp"

namespace templia {

FixedMapSamples fixed_map_F(const ParameterPair& pair, std::size_t length, std::size_t resolution) {
  if (length < 1) throw std::invalid_argument("fixed-map F needs L >= 1");
  if (resolution < 2) throw std::invalid_argument("fixed-map F needs resolution >= 2");
  FixedMapSamples out{pair, length, std::vector<FixedMapSample>(resolution)};
  const double radius = escape_radius(pair);
  const auto n = static_cast<long>(resolution);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    const double a = static_cast<double>(i) / static_cast<double>(resolution - 1);
    const BitWord word = binary_expansion(a, length);
    const bool bounded = escape_index({0.0, 0.0}, pair, word, radius * radius) < 0;
    out.samples[static_cast<std::size_t>(i)] = {a, bounded ? 1 : 0};
  }
  return out;
}

}  // namespace templia
