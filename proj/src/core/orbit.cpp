#include "templia/orbit.hpp"

#include <cmath>
#include <stdexcept>

namespace templia {

OrbitOutcome template_orbit(ComplexPoint start, const ParameterPair& pair, const SymbolicTemplate& t,
                            std::size_t max_iter, double radius) {
  if (max_iter < 1) throw std::invalid_argument("template orbit needs max_iter >= 1");
  const BitWord symbols = t.prefix(max_iter);
  const double radius_sq = radius * radius;

  OrbitOutcome out;
  ComplexPoint z = start;
  if (z.norm_sq() > radius_sq) {
    out.escaped = true;
    out.escape_index = 0;
    out.final_magnitude = z.abs();
    return out;
  }
  for (std::size_t n = 0; n < max_iter; ++n) {
    z = step(z, pair.select(symbols[n]));
    if (z.norm_sq() > radius_sq) {
      out.escaped = true;
      out.escape_index = n + 1;
      out.iters_used = n + 1;
      out.final_magnitude = z.abs();
      return out;
    }
  }
  out.iters_used = max_iter;
  out.final_magnitude = z.abs();
  return out;
}

}  // namespace templia
