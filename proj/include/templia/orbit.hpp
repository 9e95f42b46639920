#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "templia/complex_point.hpp"
#include "templia/symbolic_template.hpp"

namespace templia {

struct OrbitOutcome {
  bool escaped = false;
  std::optional<std::size_t> escape_index;  // first n with |xi_n| > R
  double final_magnitude = 0.0;             // |xi| at escape, or after the last step
  std::size_t iters_used = 0;
};

/// Iterates xi_{n+1} = xi_n^2 + c_{s_n} for at most max_iter steps and stops at
/// the first |xi_n| > radius. Requires max_iter >= 1 and a finite template at
/// least max_iter long (std::invalid_argument / std::out_of_range otherwise).
OrbitOutcome template_orbit(ComplexPoint start, const ParameterPair& pair,
                            const SymbolicTemplate& t, std::size_t max_iter, double radius);

/// Hot-loop form over pre-materialized symbols (one per step). Returns the
/// escape index, or -1 when the orbit stays within the radius for every step.
inline std::int32_t escape_index(ComplexPoint z, const ParameterPair& pair,
                                 std::span<const Bit> symbols, double radius_sq) {
  double x = z.re;
  double y = z.im;
  if (x * x + y * y > radius_sq) return 0;
  const double cr[2] = {pair.c0.re, pair.c1.re};
  const double ci[2] = {pair.c0.im, pair.c1.im};
  const std::size_t n = symbols.size();
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned s = symbols[i];
    const double xx = x * x;
    const double yy = y * y;
    const double nx = xx - yy + cr[s];
    y = 2.0 * x * y + ci[s];
    x = nx;
    if (x * x + y * y > radius_sq) return static_cast<std::int32_t>(i + 1);
  }
  return -1;
}

struct EscapeSample {
  std::int32_t index;     // as escape_index
  double distance_bound;  // 0 for bounded orbits
};

/// escape_index plus the exterior distance estimate 2|xi| ln|xi| / |dxi/dxi_0|,
/// evaluated once the orbit passes |xi| > 1e8 (escaped orbits keep iterating
/// past the radius for this, reusing the last symbol if the word runs out).
/// The true distance to the filled set lies roughly within [b/4, b].
inline EscapeSample escape_with_distance(ComplexPoint z, const ParameterPair& pair, std::span<const Bit> symbols,
                                         double radius_sq) {
  constexpr double kFarSq = 1e16;
  constexpr std::size_t kExtraSteps = 64;
  const double cr[2] = {pair.c0.re, pair.c1.re};
  const double ci[2] = {pair.c0.im, pair.c1.im};
  const std::size_t n = symbols.size();
  double x = z.re;
  double y = z.im;
  double dx = 1.0;
  double dy = 0.0;
  std::int32_t index = x * x + y * y > radius_sq ? 0 : -1;
  std::size_t i = 0;
  for (; index < 0 && i < n; ++i) {
    const unsigned s = symbols[i];
    const double ndx = 2.0 * (x * dx - y * dy);
    dy = 2.0 * (x * dy + y * dx);
    dx = ndx;
    const double xx = x * x;
    const double yy = y * y;
    const double nx = xx - yy + cr[s];
    y = 2.0 * x * y + ci[s];
    x = nx;
    if (x * x + y * y > radius_sq) index = static_cast<std::int32_t>(i + 1);
  }
  if (index < 0) return {index, 0.0};
  for (std::size_t extra = 0; extra < kExtraSteps && x * x + y * y <= kFarSq; ++extra, ++i) {
    const unsigned s = n == 0 ? 1 : symbols[std::min(i, n - 1)];
    const double ndx = 2.0 * (x * dx - y * dy);
    dy = 2.0 * (x * dy + y * dx);
    dx = ndx;
    const double nx = x * x - y * y + cr[s];
    y = 2.0 * x * y + ci[s];
    x = nx;
  }
  const double r = std::hypot(x, y);
  const double d = std::hypot(dx, dy);
  return {index, 2.0 * r * std::log(r) / d};
}

}  // namespace templia
