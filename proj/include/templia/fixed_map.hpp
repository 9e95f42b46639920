#pragma once

#include <cstddef>
#include <vector>

#include "templia/complex_point.hpp"

namespace templia {

struct FixedMapSample {
  double a;
  int f;  // 1 if the orbit of 0 stays bounded for L steps
};

/// F over [0,1] for a fixed pair: each a = i/(resolution-1) is expanded into L
/// binary digits, used as the template, and the orbit of 0 is iterated L steps.
struct FixedMapSamples {
  ParameterPair pair;
  std::size_t length = 15;
  std::vector<FixedMapSample> samples;
};

/// Throws std::invalid_argument if length < 1 or resolution < 2.
FixedMapSamples fixed_map_F(const ParameterPair& pair, std::size_t length, std::size_t resolution);

}  // namespace templia
