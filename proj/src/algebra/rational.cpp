#include "qosr/algebra/rational.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace qosr {
namespace {

using Wide = __int128;

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(v);
}

Rational make(Wide num, Wide den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {narrow(num), narrow(den)};
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    if (num == std::numeric_limits<std::int64_t>::min() || den == std::numeric_limits<std::int64_t>::min()) {
      throw std::overflow_error("rational arithmetic overflow");
    }
    num = -num;
    den = -den;
  }
  auto g = static_cast<std::int64_t>(wide_gcd(num, den));
  num_ = num / g;
  den_ = den / g;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.is_infinite() || b.is_infinite()) return Rational::infinity();
  if (a.den_ == 1 && b.den_ == 1) return {narrow(Wide{a.num_} + b.num_)};
  return make(Wide{a.num_} * b.den_ + Wide{b.num_} * a.den_, Wide{a.den_} * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  if (b.is_infinite()) throw std::domain_error("subtraction of infinity");
  if (a.is_infinite()) return a;
  return make(Wide{a.num_} * b.den_ - Wide{b.num_} * a.den_, Wide{a.den_} * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_infinite() || b.is_infinite()) {
    const Rational& other = a.is_infinite() ? b : a;
    if (!other.is_infinite() && other.num_ == 0) throw std::domain_error("0 * infinity");
    if (!other.is_infinite() && other.num_ < 0) throw std::domain_error("negative infinity");
    return Rational::infinity();
  }
  if (a.den_ == 1 && b.den_ == 1) return {narrow(Wide{a.num_} * b.num_)};
  return make(Wide{a.num_} * b.num_, Wide{a.den_} * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_infinite()) {
    if (a.is_infinite()) throw std::domain_error("infinity / infinity");
    return {0};
  }
  if (b.num_ == 0) throw std::domain_error("division by zero");
  if (a.is_infinite()) {
    if (b.num_ < 0) throw std::domain_error("negative infinity");
    return a;
  }
  return make(Wide{a.num_} * b.den_, Wide{a.den_} * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
  }
  return Wide{a.num_} * b.den_ <=> Wide{b.num_} * a.den_;
}

std::string Rational::to_string() const {
  if (is_infinite()) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  if (text == "inf") return infinity();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return {parse_int(text.substr(0, slash)), den};
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 18 || frac.find_first_not_of("0123456789") != std::string_view::npos) {
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    }
    bool negative = !whole.empty() && whole.front() == '-';
    std::int64_t int_part = whole.empty() || whole == "-" ? 0 : parse_int(whole);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational fractional{parse_int(frac), scale};
    Rational magnitude = Rational{int_part < 0 ? -int_part : int_part} + fractional;
    return negative ? Rational{0} - magnitude : magnitude;
  }
  return {parse_int(text)};
}

}  // namespace qosr
