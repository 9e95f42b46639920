#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace templia {

using Bit = std::uint8_t;
using BitWord = std::vector<Bit>;

/// Repeats `block` forever: s_n = block[n mod k].
struct PeriodicTemplate {
  BitWord block;
};

/// An explicit finite word.
struct FiniteTemplate {
  BitWord word;
};

/// `length` copies of `base_symbol` except at the 1-based position
/// `error_position`, which holds `error_symbol`.
struct SingleErrorTemplate {
  std::size_t error_position = 1;
  std::size_t length = 1;
  Bit base_symbol = 1;
  Bit error_symbol = 0;
};

/// Bernoulli(p) word of a given length drawn from the pinned SplitMix64 stream.
struct RandomTemplate {
  std::uint64_t seed = 0;
  std::size_t length = 1;
  double ones_probability = 0.5;
};

/// The first `length` binary digits of a in [0,1], using the non-terminating
/// expansion for dyadic rationals (0.1000...b becomes 0.0111...b).
struct BinaryExpansionTemplate {
  double value = 0.0;
  std::size_t length = 1;
};

/// A binary symbol source. Symbol 0 selects f_{c0}, symbol 1 selects f_{c1}.
class SymbolicTemplate {
 public:
  using Variant = std::variant<PeriodicTemplate, FiniteTemplate, SingleErrorTemplate,
                               RandomTemplate, BinaryExpansionTemplate>;

  // Constructors validate the variant invariants and throw std::invalid_argument.
  static SymbolicTemplate periodic(BitWord block);
  static SymbolicTemplate finite(BitWord word);
  static SymbolicTemplate single_error(std::size_t error_position, std::size_t length,
                                       Bit base_symbol = 1, Bit error_symbol = 0);
  static SymbolicTemplate random(std::uint64_t seed, std::size_t length,
                                 double ones_probability = 0.5);
  static SymbolicTemplate binary_expansion(double value, std::size_t length);

  const Variant& variant() const { return variant_; }

  bool is_periodic() const { return std::holds_alternative<PeriodicTemplate>(variant_); }

  /// Number of symbols for finite variants, 0 for periodic templates (unbounded).
  std::size_t length() const;

  /// s_n. Throws std::out_of_range past the end of a finite template.
  Bit symbol(std::size_t n) const;

  /// The first `count` symbols. Throws std::out_of_range if a finite template
  /// is shorter than `count`.
  BitWord prefix(std::size_t count) const;

  /// Canonical textual identity, in the grammar read by parse_template_spec.
  std::string descriptor() const;

 private:
  explicit SymbolicTemplate(Variant v) : variant_(std::move(v)) {}
  Variant variant_;
};

/// First k symbols of a template.
struct TemplateRoot {
  BitWord word;
  bool operator==(const TemplateRoot&) const = default;
};

/// Drops the first j symbols: s'_n = s_{n+j}. Periodic blocks are rotated; a
/// single-error word keeps its variant while the error is still ahead, and
/// every other finite variant becomes an explicit word of length N - j.
SymbolicTemplate shift(const SymbolicTemplate& t, std::size_t j);

TemplateRoot k_root(const SymbolicTemplate& t, std::size_t k);

/// Same k-root.
bool share_root(const SymbolicTemplate& a, const SymbolicTemplate& b, std::size_t k);

/// Binary digits b_1..b_L of a in [0,1] (infinite form for dyadics; 0 -> all
/// zeros, 1 -> all ones).
BitWord binary_expansion(double value, std::size_t length);

/// Pinned counter-based generator: the n-th (0-based) output of a SplitMix64
/// stream started at `seed`.
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t n);

/// Bernoulli word from splitmix64_at: bit n is 1 iff (out_n >> 11) * 2^-53 < p.
BitWord random_word(std::uint64_t seed, std::size_t length, double ones_probability);

std::string format_word(std::span<const Bit> word);

}  // namespace templia
