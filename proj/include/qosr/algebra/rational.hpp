#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace qosr {

// Exact rational number with 64-bit numerator and denominator, extended with
// a single +infinity value. Values are always normalised (den > 0, gcd == 1),
// so structural equality is numeric equality.
//
// Arithmetic is checked: any intermediate that does not fit back into 64 bits
// after reduction throws std::overflow_error instead of silently wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  static constexpr Rational infinity() {
    Rational r;
    r.num_ = 1;
    r.den_ = 0;
    return r;
  }

  [[nodiscard]] constexpr bool is_infinite() const { return den_ == 0; }
  [[nodiscard]] constexpr bool is_integer() const { return den_ == 1; }
  [[nodiscard]] constexpr std::int64_t num() const { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend constexpr bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "inf", "7", "-2" or "3/10".
  [[nodiscard]] std::string to_string() const;

  // Accepts the to_string() forms plus finite decimals ("0.25"), all exact.
  // Throws std::invalid_argument on malformed input.
  static Rational parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace qosr
