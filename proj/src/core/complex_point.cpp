#include "templia/complex_point.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace templia {

ComplexPoint ComplexPoint::checked(double re, double im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw std::invalid_argument("complex point has a non-finite component");
  }
  return {re, im};
}

double ComplexPoint::abs() const { return std::hypot(re, im); }

ParameterPair ParameterPair::checked(ComplexPoint c0, ComplexPoint c1) {
  return {ComplexPoint::checked(c0.re, c0.im), ComplexPoint::checked(c1.re, c1.im)};
}

double escape_radius(const ParameterPair& pair) {
  return std::max({2.0, pair.c0.abs(), pair.c1.abs()});
}

namespace {

double parse_real_part(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw std::invalid_argument("malformed complex number '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

ComplexPoint parse_complex(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty complex number");
  if (text.back() != 'i') return {parse_real_part(text, text), 0.0};

  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not leading and not part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string_view real_text = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view imag_text = split == std::string_view::npos ? body : body.substr(split);

  double im = 0.0;
  if (imag_text.empty() || imag_text == "+") {
    im = 1.0;
  } else if (imag_text == "-") {
    im = -1.0;
  } else {
    im = parse_real_part(imag_text, text);
  }
  const double re = real_text.empty() ? 0.0 : parse_real_part(real_text, text);
  return {re, im};
}

std::string format_real(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string format_complex(ComplexPoint z) {
  std::string out = format_real(z.re);
  if (z.im == 0.0 && !std::signbit(z.im)) return out;
  const std::string im = format_real(z.im);
  if (im.front() != '-') out += '+';
  out += im;
  out += 'i';
  return out;
}

}  // namespace templia
