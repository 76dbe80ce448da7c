#include "qosr/algebra/frontier.hpp"

namespace qosr {

std::vector<std::vector<Rational>> weight_grid(const WeightProfile& w, std::size_t grid) {
  std::vector<std::vector<Rational>> axes;
  for (std::size_t i = 0; i < w.weights.size(); ++i) {
    const Rational& k = w.weights[i];
    const Rational& eps = w.slack[i];
    std::vector<Rational> axis;
    if (eps == Rational{0}) {
      axis.push_back(k);
    } else {
      auto n = static_cast<std::int64_t>(std::max<std::size_t>(grid, 2));
      Rational lo = k - eps;
      for (std::int64_t j = 0; j < n; ++j) axis.push_back(lo + eps * Rational{j, n - 1});
    }
    axes.push_back(std::move(axis));
  }
  std::vector<std::vector<Rational>> points{{}};
  for (const auto& axis : axes) {
    std::vector<std::vector<Rational>> next;
    for (const auto& p : points) {
      for (const auto& v : axis) {
        auto q = p;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    }
    points = std::move(next);
  }
  return points;
}

Rational weighted_sum(const MultiCost& c, const std::vector<Rational>& w) {
  Rational sum{0};
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (w[i] == Rational{0}) continue;
    sum += w[i] * c[i];
  }
  return sum;
}

HoareSemiring::Element HoareSemiring::compact(const Element& xs) const {
  Element out;
  for (const auto& x : xs) {
    if (x == base_.zero()) continue;
    bool drop = false;
    for (const auto& y : xs) {
      if (base_.compare(y, x) == Ordering::Better) {
        drop = true;
        break;
      }
    }
    if (!drop) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

HoareSemiring::Element HoareSemiring::choose(const Element& a, const Element& b) const {
  Element u = a;
  u.insert(u.end(), b.begin(), b.end());
  return compact(u);
}

HoareSemiring::Element HoareSemiring::combine(const Element& a, const Element& b) const {
  Element p;
  p.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) p.push_back(base_.combine(x, y));
  }
  return compact(p);
}

Ordering HoareSemiring::compare(const Element& a, const Element& b) const {
  Element c = choose(a, b);
  bool is_a = c == a;
  bool is_b = c == b;
  if (is_a && is_b) return Ordering::Equal;
  if (is_a) return Ordering::Better;
  if (is_b) return Ordering::Worse;
  return Ordering::Incomparable;
}

}  // namespace qosr
