#pragma once

#include <string>
#include <string_view>

namespace templia {

/// A point of the complex plane. Plain value type; finiteness is enforced at
/// the boundaries that accept user data (see `ComplexPoint::checked`).
struct ComplexPoint {
  double re = 0.0;
  double im = 0.0;

  /// Throws std::invalid_argument unless both components are finite.
  static ComplexPoint checked(double re, double im);

  bool operator==(const ComplexPoint&) const = default;

  double norm_sq() const { return re * re + im * im; }
  double abs() const;
};

inline ComplexPoint operator+(ComplexPoint a, ComplexPoint b) { return {a.re + b.re, a.im + b.im}; }
inline ComplexPoint operator-(ComplexPoint a, ComplexPoint b) { return {a.re - b.re, a.im - b.im}; }

/// The two maps z^2 + c0 and z^2 + c1 driven by a template.
struct ParameterPair {
  ComplexPoint c0;
  ComplexPoint c1;

  /// Throws std::invalid_argument on non-finite parameters.
  static ParameterPair checked(ComplexPoint c0, ComplexPoint c1);

  const ComplexPoint& select(unsigned symbol) const { return symbol ? c1 : c0; }
  bool operator==(const ParameterPair&) const = default;
};

/// One application of f_c(z) = z^2 + c.
inline ComplexPoint step(ComplexPoint z, ComplexPoint c) {
  return {z.re * z.re - z.im * z.im + c.re, 2.0 * z.re * z.im + c.im};
}

/// max(2, |c0|, |c1|). Any |z| above this grows under either map, so the
/// orbit diverges.
double escape_radius(const ParameterPair& pair);

/// Parses `a+bi`, `a-bi`, `a`, `bi`, `i`, `-i` (no spaces).
/// Throws std::invalid_argument naming the text on failure.
ComplexPoint parse_complex(std::string_view text);

/// Shortest round-trip text in the same `a+bi` form accepted by parse_complex.
std::string format_complex(ComplexPoint z);

/// Shortest round-trip decimal text for a double.
std::string format_real(double x);

}  // namespace templia
