#include "qosr/algebra/laws.hpp"

#include <sstream>

#include "qosr/algebra/frontier.hpp"
#include "qosr/algebra/random.hpp"

namespace qosr {
namespace {

constexpr std::size_t kMaxExamples = 5;

Rational sample_value(Rng& rng, DimKind kind, bool finite_only, bool positive_only) {
  switch (kind) {
    case DimKind::Weighted:
    case DimKind::Bandwidth:
      if (!finite_only && uniform_below(rng, 10) == 0) return Rational::infinity();
      return Rational{uniform_in(rng, positive_only ? 1 : 0, 12)};
    case DimKind::Probabilistic: {
      static constexpr std::int64_t dens[] = {2, 3, 4, 5, 10};
      std::int64_t d = dens[uniform_below(rng, 5)];
      return Rational{uniform_in(rng, positive_only ? 1 : 0, d), d};
    }
    case DimKind::Boolean: return Rational{uniform_in(rng, 0, 1)};
  }
  return Rational{0};
}

MultiCost sample_cost(Rng& rng, const SemiringSpec& s) {
  auto roll = uniform_below(rng, 20);
  if (roll == 0) return s.zero();
  if (roll == 1) return s.one();
  MultiCost c(s.dims());
  if (!s.is_ordered()) {
    for (std::size_t i = 0; i < s.dims(); ++i) c[i] = sample_value(rng, s.kind(i), false, false);
    return c;
  }
  // Ordered products: finite tuples (strictly positive for probabilistic)
  // plus the zero and one tuples. Combine is cancellative only there.
  bool prob = s.kind(0) == DimKind::Probabilistic;
  for (std::size_t i = 0; i < s.dims(); ++i) c[i] = sample_value(rng, s.kind(i), true, prob);
  return c;
}

std::string show(const MultiCost& c) { return "<" + c.to_string() + ">"; }

std::string show(const HoareSemiring::Element& e) {
  std::string out = "{";
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? " " : "") + show(e[i]);
  return out + "}";
}

struct CostAlgebra {
  const SemiringSpec& s;
  using Element = MultiCost;
  Element zero() const { return s.zero(); }
  Element one() const { return s.one(); }
  Element choose(const Element& a, const Element& b) const { return s.choose(a, b); }
  Element combine(const Element& a, const Element& b) const { return s.combine(a, b); }
};

struct HoareAlgebra {
  const HoareSemiring& h;
  using Element = HoareSemiring::Element;
  Element zero() const { return h.zero(); }
  Element one() const { return h.one(); }
  Element choose(const Element& a, const Element& b) const { return h.choose(a, b); }
  Element combine(const Element& a, const Element& b) const { return h.combine(a, b); }
};

template <class A, class Sample>
LawSection run_laws(std::string name, const A& alg, std::size_t samples, Rng& rng, Sample sample) {
  using E = typename A::Element;
  LawSection sec;
  sec.name = std::move(name);
  sec.samples = samples;
  auto fail = [&](const char* law, std::initializer_list<const E*> xs) {
    ++sec.violations_by_law[law];
    if (sec.examples.size() < kMaxExamples) {
      LawViolation v{law, {}};
      for (const E* x : xs) v.operands.push_back(show(*x));
      sec.examples.push_back(std::move(v));
    }
  };
  const E zero = alg.zero();
  const E one = alg.one();
  for (std::size_t i = 0; i < samples; ++i) {
    E a = sample(rng);
    E b = sample(rng);
    E c = sample(rng);
    auto ch = [&](const E& x, const E& y) { return alg.choose(x, y); };
    auto cb = [&](const E& x, const E& y) { return alg.combine(x, y); };
    if (ch(a, b) != ch(b, a)) fail("choose commutative", {&a, &b});
    if (cb(a, b) != cb(b, a)) fail("combine commutative", {&a, &b});
    if (ch(ch(a, b), c) != ch(a, ch(b, c))) fail("choose associative", {&a, &b, &c});
    if (cb(cb(a, b), c) != cb(a, cb(b, c))) fail("combine associative", {&a, &b, &c});
    if (ch(a, a) != a) fail("choose idempotent", {&a});
    if (ch(a, zero) != a) fail("zero unit of choose", {&a});
    if (ch(a, one) != one) fail("one absorbing for choose", {&a});
    if (cb(a, one) != a) fail("one unit of combine", {&a});
    if (cb(a, zero) != zero) fail("zero absorbing for combine", {&a});
    if (cb(a, ch(b, c)) != ch(cb(a, b), cb(a, c))) fail("combine distributes over choose", {&a, &b, &c});
    // a <= b (b preferred) must survive combination with c.
    if (ch(a, b) == b && ch(cb(a, c), cb(b, c)) != cb(b, c)) fail("monotone", {&a, &b, &c});
  }
  return sec;
}

LawSection check_costs(const SemiringSpec& s, std::size_t samples, Rng& rng) {
  return run_laws(s.describe(), CostAlgebra{s}, samples, rng, [&](Rng& r) { return sample_cost(r, s); });
}

LawSection check_hoare_with(const SemiringSpec& s, std::size_t samples, Rng& rng) {
  HoareSemiring h(s);
  auto sample = [&](Rng& r) {
    HoareSemiring::Element xs;
    auto n = uniform_below(r, 5);
    for (std::uint64_t i = 0; i < n; ++i) xs.push_back(sample_cost(r, s));
    return h.compact(xs);
  };
  return run_laws("hoare(" + s.describe() + ")", HoareAlgebra{h}, samples, rng, sample);
}

}  // namespace

std::size_t LawSection::violations() const {
  std::size_t n = 0;
  for (const auto& [law, count] : violations_by_law) n += count;
  return n;
}

bool LawReport::ok() const {
  for (const auto& sec : sections) {
    if (sec.violations() != 0) return false;
  }
  return true;
}

std::string LawReport::to_string() const {
  std::ostringstream out;
  for (const auto& sec : sections) {
    out << sec.name << ": " << sec.samples << " samples, " << sec.violations() << " violations\n";
    for (const auto& [law, count] : sec.violations_by_law) out << "  " << law << ": " << count << "\n";
    for (const auto& ex : sec.examples) {
      out << "  e.g. " << ex.law << ":";
      for (const auto& o : ex.operands) out << " " << o;
      out << "\n";
    }
  }
  return out.str();
}

LawSection check_semiring(const SemiringSpec& s, std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  return check_costs(s, samples, rng);
}

LawSection check_hoare(const SemiringSpec& s, std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  return check_hoare_with(s, samples, rng);
}

LawReport law_check(const SemiringSpec& s, std::size_t samples, std::uint64_t seed,
                    const std::optional<WeightProfile>& w) {
  if (samples == 0) throw ContractViolation("law_check needs at least one sample");
  Rng rng(seed);
  LawReport report;
  report.sections.push_back(check_costs(s, samples, rng));
  if (!s.is_ordered()) {
    SemiringSpec sq = product(s, s);
    report.sections.push_back(check_costs(sq, samples, rng));
    report.sections.push_back(check_hoare_with(s, samples, rng));
    bool single_kind = true;
    for (DimKind k : s.kinds()) single_kind = single_kind && k == s.kind(0);
    if (single_kind && (s.kind(0) == DimKind::Weighted || s.kind(0) == DimKind::Probabilistic)) {
      WeightProfile profile = w ? *w : WeightProfile::uniform(sq.dims());
      report.sections.push_back(check_costs(ordered_weighted(sq, profile), samples, rng));
    }
  } else {
    report.sections.push_back(check_hoare_with(s, samples, rng));
  }
  return report;
}

}  // namespace qosr
