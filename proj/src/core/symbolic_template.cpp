#include "templia/symbolic_template.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "templia/complex_point.hpp"

namespace templia {

namespace {

void check_bits(const BitWord& w, const char* what) {
  if (w.empty()) throw std::invalid_argument(std::string(what) + " must be nonempty");
  for (Bit b : w) {
    if (b > 1) throw std::invalid_argument(std::string(what) + " may only contain 0 and 1");
  }
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t n) {
  std::uint64_t z = seed + (n + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

Bit random_bit(std::uint64_t seed, std::size_t n, double p) {
  const double u = static_cast<double>(splitmix64_at(seed, n) >> 11) * 0x1.0p-53;
  return u < p ? 1 : 0;
}

}  // namespace

BitWord random_word(std::uint64_t seed, std::size_t length, double ones_probability) {
  BitWord w(length);
  for (std::size_t n = 0; n < length; ++n) w[n] = random_bit(seed, n, ones_probability);
  return w;
}

BitWord binary_expansion(double value, std::size_t length) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument("binary expansion needs a value in [0,1]");
  }
  BitWord bits(length, 0);
  if (value == 0.0) return bits;
  if (value == 1.0) return BitWord(length, 1);

  // Every double is dyadic, so doubling and subtracting is exact and the finite
  // expansion terminates. Its last 1 only matters if it lies within `length`.
  double rest = value;
  std::size_t last_one = 0;  // 1-based position of the last 1 seen so far
  for (std::size_t i = 0; i < length && rest != 0.0; ++i) {
    rest *= 2.0;
    if (rest >= 1.0) {
      bits[i] = 1;
      rest -= 1.0;
      last_one = i + 1;
    }
  }
  if (rest == 0.0 && last_one > 0) {
    // Terminates inside the window: switch to ...0111... from the last 1.
    bits[last_one - 1] = 0;
    for (std::size_t i = last_one; i < length; ++i) bits[i] = 1;
  }
  return bits;
}

std::string format_word(std::span<const Bit> word) {
  std::string s;
  s.reserve(word.size());
  for (Bit b : word) s += static_cast<char>('0' + b);
  return s;
}

SymbolicTemplate SymbolicTemplate::periodic(BitWord block) {
  check_bits(block, "periodic block");
  return SymbolicTemplate(PeriodicTemplate{std::move(block)});
}

SymbolicTemplate SymbolicTemplate::finite(BitWord word) {
  check_bits(word, "template word");
  return SymbolicTemplate(FiniteTemplate{std::move(word)});
}

SymbolicTemplate SymbolicTemplate::single_error(std::size_t error_position, std::size_t length,
                                                Bit base_symbol, Bit error_symbol) {
  if (length < 1) throw std::invalid_argument("single-error template needs N >= 1");
  if (error_position < 1 || error_position > length) {
    throw std::invalid_argument("single-error position k must satisfy 1 <= k <= N");
  }
  if (base_symbol > 1 || error_symbol > 1) {
    throw std::invalid_argument("template symbols must be 0 or 1");
  }
  return SymbolicTemplate(SingleErrorTemplate{error_position, length, base_symbol, error_symbol});
}

SymbolicTemplate SymbolicTemplate::random(std::uint64_t seed, std::size_t length,
                                          double ones_probability) {
  if (length < 1) throw std::invalid_argument("random template needs N >= 1");
  if (!(ones_probability >= 0.0 && ones_probability <= 1.0)) {
    throw std::invalid_argument("random template needs p in [0,1]");
  }
  return SymbolicTemplate(RandomTemplate{seed, length, ones_probability});
}

SymbolicTemplate SymbolicTemplate::binary_expansion(double value, std::size_t length) {
  if (length < 1) throw std::invalid_argument("binary expansion needs L >= 1");
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument("binary expansion needs a in [0,1]");
  }
  return SymbolicTemplate(BinaryExpansionTemplate{value, length});
}

std::size_t SymbolicTemplate::length() const {
  return std::visit(Overloaded{
                        [](const PeriodicTemplate&) -> std::size_t { return 0; },
                        [](const FiniteTemplate& t) { return t.word.size(); },
                        [](const SingleErrorTemplate& t) { return t.length; },
                        [](const RandomTemplate& t) { return t.length; },
                        [](const BinaryExpansionTemplate& t) { return t.length; },
                    },
                    variant_);
}

Bit SymbolicTemplate::symbol(std::size_t n) const {
  if (!is_periodic() && n >= length()) {
    throw std::out_of_range("template index " + std::to_string(n) + " past length " +
                            std::to_string(length()));
  }
  return std::visit(Overloaded{
                        [n](const PeriodicTemplate& t) { return t.block[n % t.block.size()]; },
                        [n](const FiniteTemplate& t) { return t.word[n]; },
                        [n](const SingleErrorTemplate& t) {
                          return n + 1 == t.error_position ? t.error_symbol : t.base_symbol;
                        },
                        [n](const RandomTemplate& t) { return random_bit(t.seed, n, t.ones_probability); },
                        [n](const BinaryExpansionTemplate& t) {
                          return templia::binary_expansion(t.value, n + 1)[n];
                        },
                    },
                    variant_);
}

BitWord SymbolicTemplate::prefix(std::size_t count) const {
  if (!is_periodic() && count > length()) {
    throw std::out_of_range("template of length " + std::to_string(length()) +
                            " is shorter than the " + std::to_string(count) + " symbols requested");
  }
  return std::visit(Overloaded{
                        [count](const PeriodicTemplate& t) {
                          BitWord w(count);
                          for (std::size_t n = 0; n < count; ++n) w[n] = t.block[n % t.block.size()];
                          return w;
                        },
                        [count](const FiniteTemplate& t) {
                          return BitWord(t.word.begin(), t.word.begin() + static_cast<std::ptrdiff_t>(count));
                        },
                        [count](const SingleErrorTemplate& t) {
                          BitWord w(count, t.base_symbol);
                          if (t.error_position <= count) w[t.error_position - 1] = t.error_symbol;
                          return w;
                        },
                        [count](const RandomTemplate& t) {
                          return random_word(t.seed, count, t.ones_probability);
                        },
                        [count](const BinaryExpansionTemplate& t) {
                          BitWord w = templia::binary_expansion(t.value, t.length);
                          w.resize(count);
                          return w;
                        },
                    },
                    variant_);
}

std::string SymbolicTemplate::descriptor() const {
  return std::visit(
      Overloaded{
          [](const PeriodicTemplate& t) { return "periodic:" + format_word(t.block); },
          [](const FiniteTemplate& t) { return "word:" + format_word(t.word); },
          [](const SingleErrorTemplate& t) {
            std::string s = "error:k=" + std::to_string(t.error_position) + ",N=" + std::to_string(t.length);
            if (t.base_symbol != 1 || t.error_symbol != 0) {
              s += ",base=" + std::to_string(t.base_symbol) + ",err=" + std::to_string(t.error_symbol);
            }
            return s;
          },
          [](const RandomTemplate& t) {
            return "random:seed=" + std::to_string(t.seed) + ",N=" + std::to_string(t.length) +
                   ",p=" + format_real(t.ones_probability);
          },
          [](const BinaryExpansionTemplate& t) {
            return "binary:a=" + format_real(t.value) + ",L=" + std::to_string(t.length);
          },
      },
      variant_);
}

SymbolicTemplate shift(const SymbolicTemplate& t, std::size_t j) {
  if (const auto* p = std::get_if<PeriodicTemplate>(&t.variant())) {
    const std::size_t k = p->block.size();
    BitWord rotated(k);
    for (std::size_t n = 0; n < k; ++n) rotated[n] = p->block[(n + j) % k];
    return SymbolicTemplate::periodic(std::move(rotated));
  }
  const std::size_t n = t.length();
  if (j >= n) {
    throw std::out_of_range("shift by " + std::to_string(j) + " leaves nothing of a template of length " +
                            std::to_string(n));
  }
  if (const auto* e = std::get_if<SingleErrorTemplate>(&t.variant())) {
    if (e->error_position > j) {
      return SymbolicTemplate::single_error(e->error_position - j, n - j, e->base_symbol, e->error_symbol);
    }
    return SymbolicTemplate::finite(BitWord(n - j, e->base_symbol));
  }
  BitWord w = t.prefix(n);
  return SymbolicTemplate::finite(BitWord(w.begin() + static_cast<std::ptrdiff_t>(j), w.end()));
}

TemplateRoot k_root(const SymbolicTemplate& t, std::size_t k) {
  if (k < 1) throw std::invalid_argument("k-root needs k >= 1");
  return TemplateRoot{t.prefix(k)};
}

bool share_root(const SymbolicTemplate& a, const SymbolicTemplate& b, std::size_t k) {
  return k_root(a, k) == k_root(b, k);
}

}  // namespace templia
