#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "templia/raster.hpp"

namespace templia {

struct ErrorSweepFrame {
  std::size_t error_position;
  ClassifiedRaster raster;
};

/// Renders the all-ones template of length N (f_{c1}, the intended map) with a
/// single 0 (f_{c0}) at each 1-based position k, using max_iter = N.
std::vector<ErrorSweepFrame> error_sweep(ComplexPoint c1, ComplexPoint c0, const std::vector<std::size_t>& positions,
                                         std::size_t length, const GridSpec& grid);

struct ConvergenceEntry {
  std::size_t root_length;
  std::optional<double> distance;  // Hausdorff distance of the boundaries
  std::string error;               // why distance is absent
};

struct ConvergenceCurve {
  ParameterPair pair;
  std::string template_descriptor;
  std::size_t reference_length = 200;
  std::vector<ConvergenceEntry> entries;
};

/// For each n: boundary of the raster of the n-root (max_iter = n) against the
/// boundary of the reference raster (max_iter = reference_length). Root lengths
/// must be strictly increasing and at most reference_length.
ConvergenceCurve convergence_experiment(const ParameterPair& pair, const SymbolicTemplate& t,
                                        const std::vector<std::size_t>& root_lengths,
                                        std::size_t reference_length, const GridSpec& grid);

/// Hausdorff distance between the Julia boundaries of two templates, both
/// rendered with max_iter = length.
double julia_boundary_distance(const ParameterPair& pair, const SymbolicTemplate& a, const SymbolicTemplate& b,
                               std::size_t length, const GridSpec& grid);

/// Word of `length` symbols that copies the first `root` symbols of `base`
/// and takes the rest from random_word(seed, length, p).
SymbolicTemplate graft_root(const SymbolicTemplate& base, std::size_t root, std::uint64_t seed,
                            std::size_t length, double ones_probability = 0.5);

}  // namespace templia
