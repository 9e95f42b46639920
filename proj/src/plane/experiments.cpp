#include "templia/experiments.hpp"

#include <algorithm>
#include <stdexcept>

#include "templia/boundary.hpp"
#include "templia/hausdorff.hpp"

namespace templia {

std::vector<ErrorSweepFrame> error_sweep(ComplexPoint c1, ComplexPoint c0, const std::vector<std::size_t>& positions,
                                         std::size_t length, const GridSpec& grid) {
  for (std::size_t k : positions) {
    if (k < 1 || k > length) {
      throw std::invalid_argument("error position " + std::to_string(k) + " outside 1.." + std::to_string(length));
    }
  }
  const ParameterPair pair = ParameterPair::checked(c0, c1);
  std::vector<ErrorSweepFrame> frames;
  frames.reserve(positions.size());
  for (std::size_t k : positions) {
    frames.push_back({k, render_julia(pair, SymbolicTemplate::single_error(k, length, 1, 0), grid, length)});
  }
  return frames;
}

ConvergenceCurve convergence_experiment(const ParameterPair& pair, const SymbolicTemplate& t,
                                        const std::vector<std::size_t>& root_lengths,
                                        std::size_t reference_length, const GridSpec& grid) {
  for (std::size_t i = 0; i < root_lengths.size(); ++i) {
    if (root_lengths[i] < 1 || root_lengths[i] > reference_length) {
      throw std::invalid_argument("root length " + std::to_string(root_lengths[i]) + " outside 1.." +
                                  std::to_string(reference_length));
    }
    if (i > 0 && root_lengths[i] <= root_lengths[i - 1]) {
      throw std::invalid_argument("root lengths must be strictly increasing");
    }
  }
  ConvergenceCurve curve{pair, t.descriptor(), reference_length, {}};
  const BoundaryPointSet reference = extract_boundary(render_julia(pair, t, grid, reference_length).cells);

  for (std::size_t n : root_lengths) {
    ConvergenceEntry entry{n, std::nullopt, {}};
    if (reference.empty()) {
      entry.error = "reference boundary is empty";
    } else {
      // The n-root drives exactly n steps, so truncation is max_iter = n.
      const BoundaryPointSet truncated = extract_boundary(render_julia(pair, t, grid, n).cells);
      if (truncated.empty()) {
        entry.error = "boundary of the " + std::to_string(n) + "-root raster is empty";
      } else {
        entry.distance = hausdorff_distance(truncated, reference);
      }
    }
    curve.entries.push_back(std::move(entry));
  }
  return curve;
}

double julia_boundary_distance(const ParameterPair& pair, const SymbolicTemplate& a, const SymbolicTemplate& b,
                               std::size_t length, const GridSpec& grid) {
  const BoundaryPointSet ba = extract_boundary(render_julia(pair, a, grid, length).cells);
  const BoundaryPointSet bb = extract_boundary(render_julia(pair, b, grid, length).cells);
  return hausdorff_distance(ba, bb);
}

SymbolicTemplate graft_root(const SymbolicTemplate& base, std::size_t root, std::uint64_t seed, std::size_t length,
                            double ones_probability) {
  if (root > length) throw std::invalid_argument("root longer than the grafted word");
  BitWord word = random_word(seed, length, ones_probability);
  const BitWord head = base.prefix(root);
  std::copy(head.begin(), head.end(), word.begin());
  return SymbolicTemplate::finite(std::move(word));
}

}  // namespace templia
