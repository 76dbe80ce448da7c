#include "qosr/algebra/semiring.hpp"

#include <algorithm>
#include <sstream>

namespace qosr {

std::string_view to_string(DimKind kind) {
  switch (kind) {
    case DimKind::Weighted: return "weighted";
    case DimKind::Bandwidth: return "bandwidth";
    case DimKind::Probabilistic: return "probabilistic";
    case DimKind::Boolean: return "boolean";
  }
  return "?";
}

std::optional<DimKind> parse_dim_kind(std::string_view text) {
  if (text == "weighted") return DimKind::Weighted;
  if (text == "bandwidth") return DimKind::Bandwidth;
  if (text == "probabilistic") return DimKind::Probabilistic;
  if (text == "boolean") return DimKind::Boolean;
  return std::nullopt;
}

std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::Better: return "better";
    case Ordering::Worse: return "worse";
    case Ordering::Equal: return "equal";
    case Ordering::Incomparable: return "incomparable";
  }
  return "?";
}

// --- MultiCost -------------------------------------------------------------

MultiCost::MultiCost(std::size_t arity, const Rational& fill) {
  if (arity > kMaxDims) throw ContractViolation("cost arity exceeds " + std::to_string(kMaxDims));
  size_ = static_cast<std::uint8_t>(arity);
  std::fill_n(values_.begin(), arity, fill);
}

MultiCost::MultiCost(std::initializer_list<Rational> values)
    : MultiCost(std::span<const Rational>(values.begin(), values.size())) {}

MultiCost::MultiCost(std::span<const Rational> values) {
  if (values.size() > kMaxDims) throw ContractViolation("cost arity exceeds " + std::to_string(kMaxDims));
  size_ = static_cast<std::uint8_t>(values.size());
  std::copy(values.begin(), values.end(), values_.begin());
}

bool operator==(const MultiCost& a, const MultiCost& b) {
  return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
}

bool operator<(const MultiCost& a, const MultiCost& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string MultiCost::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) out += ',';
    out += values_[i].to_string();
  }
  return out;
}

MultiCost MultiCost::parse(std::string_view text) {
  std::vector<Rational> values;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    values.push_back(Rational::parse(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (values.size() > kMaxDims) throw std::invalid_argument("too many cost components in '" + std::string(text) + "'");
  return MultiCost(std::span<const Rational>(values));
}

// --- WeightProfile ---------------------------------------------------------

WeightProfile WeightProfile::uniform(std::size_t dims) {
  return {std::vector<Rational>(dims, Rational{1}), std::vector<Rational>(dims, Rational{0})};
}

void WeightProfile::validate(std::size_t dims) const {
  if (weights.size() != dims || slack.size() != dims) {
    throw ContractViolation("weight profile has " + std::to_string(weights.size()) + " weights and " +
                            std::to_string(slack.size()) + " slacks for " + std::to_string(dims) + " dimensions");
  }
  for (std::size_t i = 0; i < dims; ++i) {
    if (weights[i].is_infinite() || slack[i].is_infinite() || weights[i] < Rational{0} || slack[i] < Rational{0}) {
      throw ContractViolation("weights and slacks must be finite and non-negative");
    }
    if (weights[i] - slack[i] < Rational{0}) {
      throw ContractViolation("weight " + weights[i].to_string() + " minus slack " + slack[i].to_string() +
                              " is negative in dimension " + std::to_string(i));
    }
  }
}

// --- per-dimension algebra -------------------------------------------------

Rational dim_combine(DimKind kind, const Rational& a, const Rational& b) {
  switch (kind) {
    case DimKind::Weighted: return a + b;
    case DimKind::Bandwidth:
    case DimKind::Boolean: return std::min(a, b);
    case DimKind::Probabilistic: return a * b;
  }
  return a;
}

Rational dim_choose(DimKind kind, const Rational& a, const Rational& b) {
  return kind == DimKind::Weighted ? std::min(a, b) : std::max(a, b);
}

Rational dim_zero(DimKind kind) { return kind == DimKind::Weighted ? Rational::infinity() : Rational{0}; }

Rational dim_one(DimKind kind) {
  switch (kind) {
    case DimKind::Weighted: return Rational{0};
    case DimKind::Bandwidth: return Rational::infinity();
    case DimKind::Probabilistic:
    case DimKind::Boolean: return Rational{1};
  }
  return Rational{0};
}

bool dim_in_carrier(DimKind kind, const Rational& v) {
  switch (kind) {
    case DimKind::Weighted:
    case DimKind::Bandwidth: return v.is_infinite() || (v.is_integer() && v >= Rational{0});
    case DimKind::Probabilistic: return !v.is_infinite() && v >= Rational{0} && v <= Rational{1};
    case DimKind::Boolean: return v == Rational{0} || v == Rational{1};
  }
  return false;
}

// --- SemiringSpec ----------------------------------------------------------

SemiringSpec::SemiringSpec(std::vector<DimKind> kinds) : kinds_(std::move(kinds)) {
  if (kinds_.empty()) throw ContractViolation("semiring needs at least one dimension");
  if (kinds_.size() > MultiCost::kMaxDims) {
    throw ContractViolation("at most " + std::to_string(MultiCost::kMaxDims) + " dimensions are supported");
  }
  zero_ = MultiCost(kinds_.size());
  one_ = MultiCost(kinds_.size());
  for (std::size_t i = 0; i < kinds_.size(); ++i) {
    zero_[i] = dim_zero(kinds_[i]);
    one_[i] = dim_one(kinds_[i]);
  }
}

void SemiringSpec::check_arity(const MultiCost& a, const MultiCost& b) const {
  if (a.size() != dims() || b.size() != dims()) {
    throw ContractViolation("cost arity mismatch: <" + a.to_string() + "> and <" + b.to_string() + "> for " +
                            std::to_string(dims()) + " dimensions");
  }
}

MultiCost SemiringSpec::combine(const MultiCost& a, const MultiCost& b) const {
  check_arity(a, b);
  MultiCost out(dims());
  for (std::size_t i = 0; i < dims(); ++i) out[i] = dim_combine(kinds_[i], a[i], b[i]);
  return out;
}

MultiCost SemiringSpec::product_choose(const MultiCost& a, const MultiCost& b) const {
  MultiCost out(dims());
  for (std::size_t i = 0; i < dims(); ++i) out[i] = dim_choose(kinds_[i], a[i], b[i]);
  return out;
}

Rational SemiringSpec::scalarize(const MultiCost& c) const {
  if (!weights_) throw UnsupportedConfiguration("scalarize requires an ordered semiring");
  const auto& k = weights_->weights;
  if (kinds_.front() == DimKind::Weighted) {
    Rational sum{0};
    for (std::size_t i = 0; i < dims(); ++i) {
      if (k[i] == Rational{0}) continue;
      sum += k[i] * c[i];
    }
    return sum;
  }
  Rational prod{1};
  for (std::size_t i = 0; i < dims(); ++i) {
    for (std::int64_t e = 0; e < k[i].num(); ++e) prod *= c[i];
  }
  return prod;
}

MultiCost SemiringSpec::choose(const MultiCost& a, const MultiCost& b) const {
  check_arity(a, b);
  if (!weights_) return product_choose(a, b);
  Rational sa = scalarize(a);
  Rational sb = scalarize(b);
  if (sa == sb) return product_choose(a, b);
  bool a_wins = kinds_.front() == DimKind::Weighted ? sa < sb : sa > sb;
  return a_wins ? a : b;
}

Ordering SemiringSpec::compare(const MultiCost& a, const MultiCost& b) const {
  MultiCost c = choose(a, b);
  bool is_a = c == a;
  bool is_b = c == b;
  if (is_a && is_b) return Ordering::Equal;
  if (is_a) return Ordering::Better;
  if (is_b) return Ordering::Worse;
  return Ordering::Incomparable;
}

bool SemiringSpec::in_carrier(const MultiCost& c) const {
  if (c.size() != dims()) return false;
  for (std::size_t i = 0; i < dims(); ++i) {
    if (!dim_in_carrier(kinds_[i], c[i])) return false;
  }
  return true;
}

std::string SemiringSpec::describe() const {
  std::ostringstream out;
  if (weights_) out << "ordered(";
  for (std::size_t i = 0; i < dims(); ++i) out << (i ? "," : "") << to_string(kinds_[i]);
  if (weights_) {
    out << "; k=";
    for (std::size_t i = 0; i < dims(); ++i) out << (i ? "," : "") << weights_->weights[i].to_string();
    out << ")";
  }
  return out.str();
}

bool operator==(const SemiringSpec& a, const SemiringSpec& b) {
  if (a.kinds_ != b.kinds_ || a.weights_.has_value() != b.weights_.has_value()) return false;
  return !a.weights_ || a.weights_->weights == b.weights_->weights;
}

SemiringSpec product(const SemiringSpec& a, const SemiringSpec& b) {
  if (a.is_ordered() || b.is_ordered()) throw UnsupportedConfiguration("product of ordered semirings");
  std::vector<DimKind> kinds(a.kinds().begin(), a.kinds().end());
  kinds.insert(kinds.end(), b.kinds().begin(), b.kinds().end());
  return SemiringSpec(std::move(kinds));
}

SemiringSpec ordered_weighted(const SemiringSpec& base, const WeightProfile& w) {
  if (base.is_ordered()) throw UnsupportedConfiguration("semiring is already ordered");
  w.validate(base.dims());
  DimKind kind = base.kind(0);
  for (DimKind k : base.kinds()) {
    if (k != kind) throw UnsupportedConfiguration("ordered product needs dimensions of a single kind, got " + base.describe());
  }
  if (kind != DimKind::Weighted && kind != DimKind::Probabilistic) {
    throw UnsupportedConfiguration(std::string("ordered product needs a cancellative combine; ") +
                                   std::string(to_string(kind)) + " is not");
  }
  if (kind == DimKind::Probabilistic) {
    for (const auto& k : w.weights) {
      if (!k.is_integer()) throw UnsupportedConfiguration("probabilistic ordered product needs integer weights");
    }
  }
  SemiringSpec out = base;
  out.weights_ = w;
  return out;
}

}  // namespace qosr
