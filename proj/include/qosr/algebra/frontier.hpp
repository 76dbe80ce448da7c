#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "qosr/algebra/semiring.hpp"

namespace qosr {

// Compact element of the Hoare power domain over a base semiring: pairwise
// incomparable costs, each carrying up to `witness_cap` witnesses.
template <class W>
struct Frontier {
  struct Entry {
    MultiCost cost;
    std::vector<W> witnesses;  // sorted ascending, at most witness_cap
  };

  std::vector<Entry> entries;  // sorted by MultiCost lexicographic order
  std::size_t witness_cap = 4;

  [[nodiscard]] bool empty() const { return entries.empty(); }
  [[nodiscard]] std::size_t size() const { return entries.size(); }

  [[nodiscard]] std::vector<MultiCost> costs() const {
    std::vector<MultiCost> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.cost);
    return out;
  }

  // True when some element is strictly better than `c`.
  [[nodiscard]] bool dominated(const SemiringSpec& s, const MultiCost& c) const {
    return std::any_of(entries.begin(), entries.end(),
                       [&](const Entry& e) { return s.compare(e.cost, c) == Ordering::Better; });
  }

  // True when an element equal to `c` already holds a full witness list.
  [[nodiscard]] bool saturated_equal(const SemiringSpec& s, const MultiCost& c) const {
    return std::any_of(entries.begin(), entries.end(), [&](const Entry& e) {
      return e.witnesses.size() >= witness_cap && s.compare(e.cost, c) == Ordering::Equal;
    });
  }
};

namespace detail {

template <class W>
void add_witness(std::vector<W>& ws, const W& w, std::size_t cap) {
  auto it = std::lower_bound(ws.begin(), ws.end(), w);
  if (it != ws.end() && !(w < *it)) return;
  ws.insert(it, w);
  if (ws.size() > cap) ws.pop_back();
}

}  // namespace detail

// Incremental formal union. Returns true when the frontier changed.
template <class W>
bool frontier_insert(const SemiringSpec& s, Frontier<W>& f, const MultiCost& c, const W& witness) {
  if (c == s.zero()) return false;
  using Entry = typename Frontier<W>::Entry;
  for (auto& e : f.entries) {
    Ordering o = s.compare(e.cost, c);
    if (o == Ordering::Better) return false;
    if (o == Ordering::Equal) {
      auto before = e.witnesses.size();
      detail::add_witness(e.witnesses, witness, f.witness_cap);
      return e.witnesses.size() != before;
    }
  }
  std::erase_if(f.entries, [&](const Entry& e) { return s.compare(e.cost, c) == Ordering::Worse; });
  Entry fresh{c, {}};
  detail::add_witness(fresh.witnesses, witness, f.witness_cap);
  auto pos = std::lower_bound(f.entries.begin(), f.entries.end(), c,
                              [](const Entry& e, const MultiCost& v) { return e.cost < v; });
  f.entries.insert(pos, std::move(fresh));
  return true;
}

// Merge every entry (and witness) of `src` into `dst`.
template <class W>
void frontier_merge(const SemiringSpec& s, Frontier<W>& dst, const Frontier<W>& src) {
  for (const auto& e : src.entries) {
    for (const auto& w : e.witnesses) frontier_insert(s, dst, e.cost, w);
  }
}

// Pairwise product of two frontiers followed by compaction. `join` builds
// the witness of a product from the two operand witnesses.
template <class W, class Join>
Frontier<W> frontier_combine(const SemiringSpec& s, const Frontier<W>& a, const Frontier<W>& b, Join join) {
  Frontier<W> out;
  out.witness_cap = std::min(a.witness_cap, b.witness_cap);
  for (const auto& x : a.entries) {
    for (const auto& y : b.entries) {
      MultiCost c = s.combine(x.cost, y.cost);
      for (const auto& wx : x.witnesses) {
        for (const auto& wy : y.witnesses) frontier_insert(s, out, c, join(wx, wy));
      }
    }
  }
  return out;
}

// Choose-fold over all elements; zero for the empty frontier.
template <class W>
MultiCost collapse(const SemiringSpec& s, const Frontier<W>& f) {
  MultiCost acc = s.zero();
  for (const auto& e : f.entries) acc = s.choose(acc, e.cost);
  return acc;
}

// Weight vectors sampled by the cut: per dimension `grid` evenly spaced
// points over [k - eps, k] (both endpoints included; a single point when
// eps is 0), then the Cartesian product across dimensions.
std::vector<std::vector<Rational>> weight_grid(const WeightProfile& w, std::size_t grid);

// Weighted sum of `c` under weights `w`.
Rational weighted_sum(const MultiCost& c, const std::vector<Rational>& w);

// Keep b unless some c in f has a strictly smaller weighted sum than b at
// every sampled weight vector. Requires all-weighted dimensions.
template <class W>
Frontier<W> cut(const SemiringSpec& s, const Frontier<W>& f, const WeightProfile& w, std::size_t grid = 5) {
  for (DimKind k : s.kinds()) {
    if (k != DimKind::Weighted) throw UnsupportedConfiguration("cut requires weighted dimensions");
  }
  w.validate(s.dims());
  if (grid == 0) throw ContractViolation("cut grid must be positive");
  Frontier<W> out;
  out.witness_cap = f.witness_cap;
  if (f.empty()) return out;
  auto points = weight_grid(w, grid);
  std::vector<std::vector<Rational>> scal(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (const auto& p : points) scal[i].push_back(weighted_sum(f.entries[i].cost, p));
  }
  for (std::size_t b = 0; b < f.size(); ++b) {
    bool beaten = false;
    for (std::size_t c = 0; c < f.size() && !beaten; ++c) {
      if (c == b) continue;
      bool everywhere = true;
      for (std::size_t p = 0; p < points.size() && everywhere; ++p) everywhere = scal[c][p] < scal[b][p];
      beaten = everywhere;
    }
    if (!beaten) out.entries.push_back(f.entries[b]);
  }
  return out;
}

// Hoare power domain P^H(S) on compact antichains. Elements are sorted,
// duplicate-free vectors of pairwise incomparable non-zero base costs.
class HoareSemiring {
 public:
  using Element = std::vector<MultiCost>;

  explicit HoareSemiring(SemiringSpec base) : base_(std::move(base)) {}

  [[nodiscard]] const SemiringSpec& base() const { return base_; }
  [[nodiscard]] Element zero() const { return {}; }
  [[nodiscard]] Element one() const { return {base_.one()}; }

  // Drop zeros, dominated members and duplicates; sort.
  [[nodiscard]] Element compact(const Element& xs) const;
  [[nodiscard]] Element choose(const Element& a, const Element& b) const;
  [[nodiscard]] Element combine(const Element& a, const Element& b) const;
  [[nodiscard]] Ordering compare(const Element& a, const Element& b) const;

 private:
  SemiringSpec base_;
};

}  // namespace qosr
