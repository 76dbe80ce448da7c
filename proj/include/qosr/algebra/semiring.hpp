#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qosr/algebra/rational.hpp"

namespace qosr {

// Caller broke a documented precondition (arity mismatch, malformed tree...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A requested algebraic construction is not defined for the given inputs.
class UnsupportedConfiguration : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Per-dimension cost algebra. Each kind is a c-semiring on its own:
//
//   kind           carrier          choose  combine  zero  one
//   weighted       N  u {inf}       min     +        inf   0
//   bandwidth      N  u {inf}       max     min      0     inf
//   probabilistic  [0,1] rational   max     *        0     1
//   boolean        {0,1}            or      and      0     1
enum class DimKind : std::uint8_t { Weighted, Bandwidth, Probabilistic, Boolean };

std::string_view to_string(DimKind kind);
std::optional<DimKind> parse_dim_kind(std::string_view text);

// Relation of the left operand to the right one in the order induced by choose.
enum class Ordering : std::uint8_t { Better, Worse, Equal, Incomparable };

std::string_view to_string(Ordering o);

// Fixed-arity cost tuple. Stored inline; at most kMaxDims metrics.
class MultiCost {
 public:
  static constexpr std::size_t kMaxDims = 8;

  MultiCost() = default;
  explicit MultiCost(std::size_t arity, const Rational& fill = Rational{0});
  MultiCost(std::initializer_list<Rational> values);
  explicit MultiCost(std::span<const Rational> values);

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] const Rational& operator[](std::size_t i) const { return values_[i]; }
  [[nodiscard]] Rational& operator[](std::size_t i) { return values_[i]; }
  [[nodiscard]] const Rational* begin() const { return values_.data(); }
  [[nodiscard]] const Rational* end() const { return values_.data() + size_; }

  friend bool operator==(const MultiCost& a, const MultiCost& b);
  // Lexicographic numeric order; used for canonical sorting only, never as a
  // preference order.
  friend bool operator<(const MultiCost& a, const MultiCost& b);

  // "6", "2,16", "inf,0".
  [[nodiscard]] std::string to_string() const;
  static MultiCost parse(std::string_view text);

 private:
  std::array<Rational, kMaxDims> values_{};
  std::uint8_t size_ = 0;
};

// Per-dimension weights k_i and slacks eps_i for scalarised orders and the cut.
struct WeightProfile {
  std::vector<Rational> weights;
  std::vector<Rational> slack;

  static WeightProfile uniform(std::size_t dims);

  // Throws ContractViolation unless sizes match `dims`, all values are finite
  // and non-negative, and k_i - eps_i >= 0.
  void validate(std::size_t dims) const;
};

// A c-semiring over MultiCost: either the plain Cartesian product of the
// per-dimension kinds (partially ordered once dims() > 1) or an ordered
// weighted product whose choose ranks tuples by a weighted scalarisation.
class SemiringSpec {
 public:
  explicit SemiringSpec(std::vector<DimKind> kinds);

  [[nodiscard]] std::size_t dims() const { return kinds_.size(); }
  [[nodiscard]] DimKind kind(std::size_t i) const { return kinds_[i]; }
  [[nodiscard]] std::span<const DimKind> kinds() const { return kinds_; }
  [[nodiscard]] const MultiCost& zero() const { return zero_; }
  [[nodiscard]] const MultiCost& one() const { return one_; }

  // Set for semirings built by ordered_weighted().
  [[nodiscard]] const std::optional<WeightProfile>& order_weights() const { return weights_; }
  [[nodiscard]] bool is_ordered() const { return weights_.has_value(); }
  // Single dimension or ordered product; otherwise choose may return a value
  // distinct from both operands.
  [[nodiscard]] bool totally_ordered() const { return dims() == 1 || is_ordered(); }

  [[nodiscard]] MultiCost combine(const MultiCost& a, const MultiCost& b) const;
  [[nodiscard]] MultiCost choose(const MultiCost& a, const MultiCost& b) const;
  [[nodiscard]] Ordering compare(const MultiCost& a, const MultiCost& b) const;
  [[nodiscard]] bool better(const MultiCost& a, const MultiCost& b) const {
    return compare(a, b) == Ordering::Better;
  }

  // Weighted scalarisation used by the ordered choose. Only defined for
  // ordered semirings.
  [[nodiscard]] Rational scalarize(const MultiCost& c) const;

  // True when `c` has the right arity and every value lies in its carrier.
  [[nodiscard]] bool in_carrier(const MultiCost& c) const;

  // "bandwidth,weighted" or "ordered(weighted,weighted; k=1,1)".
  [[nodiscard]] std::string describe() const;

  friend bool operator==(const SemiringSpec& a, const SemiringSpec& b);

 private:
  friend SemiringSpec ordered_weighted(const SemiringSpec& base, const WeightProfile& w);

  void check_arity(const MultiCost& a, const MultiCost& b) const;
  [[nodiscard]] MultiCost product_choose(const MultiCost& a, const MultiCost& b) const;

  std::vector<DimKind> kinds_;
  MultiCost zero_;
  MultiCost one_;
  std::optional<WeightProfile> weights_;
};

// Cartesian product of two semirings (dimensions concatenated). Neither
// operand may be ordered.
SemiringSpec product(const SemiringSpec& a, const SemiringSpec& b);

// Ordered Cartesian product S_f. Every dimension must share one kind whose
// combine is cancellative on the finite carrier:
//   weighted:       scalar = sum k_i * x_i, smaller wins
//   probabilistic:  scalar = prod x_i ^ k_i (integer k_i), larger wins
// On a scalar tie choose returns the componentwise base choose.
SemiringSpec ordered_weighted(const SemiringSpec& base, const WeightProfile& w);

// Per-kind building blocks, shared with the graph module.
Rational dim_combine(DimKind kind, const Rational& a, const Rational& b);
Rational dim_choose(DimKind kind, const Rational& a, const Rational& b);
Rational dim_zero(DimKind kind);
Rational dim_one(DimKind kind);
bool dim_in_carrier(DimKind kind, const Rational& v);

}  // namespace qosr
