#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "templia/grid.hpp"
#include "templia/raster.hpp"

namespace templia {

enum class Connectivity { Connected, Disconnected, Dust, Empty };

std::string_view to_string(Connectivity c);

struct ConnectivityReport {
  std::size_t component_count = 0;
  double largest_component_fraction = 0.0;  // of all bounded pixels
  std::size_t largest_component_size = 0;   // bounded pixels in the largest component
  std::size_t dust_threshold = 16;
  Connectivity verdict = Connectivity::Empty;
};

/// 8-connected components of the bounded pixels.
///   Empty: no bounded pixel. Connected: one component. Dust: every component
///   has at most `dust_threshold` pixels. Disconnected: otherwise.
/// Throws std::invalid_argument if dust_threshold < 1.
ConnectivityReport classify_connectivity(const EscapeGrid& cells, std::size_t dust_threshold = 16);

/// Same rules on a covering mask: components are 8-connected runs of bounded
/// pixels and near-set pixels (ClassifiedRaster::near_set), while component
/// size counts only the bounded pixels in it. A set too thin for any pixel
/// center to survive therefore reads as Dust rather than Empty, and thin
/// filaments between resolved pieces still join them.
ConnectivityReport classify_connectivity(const ClassifiedRaster& raster, std::size_t dust_threshold = 16);

/// Component sizes (any order) of the 8-connected bounded pixels.
std::vector<std::size_t> component_sizes(const EscapeGrid& cells);

/// Bounded-pixel counts (any order, zeros included) of the 8-connected
/// components of the covering mask.
std::vector<std::size_t> component_sizes(const ClassifiedRaster& raster);

}  // namespace templia
