#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace deastar {

__extension__ using Int128 = __int128;

/// Exact rational with 64-bit numerator and positive denominator, always in
/// lowest terms. Products and comparisons go through 128-bit intermediates;
/// arithmetic that does not fit back into 64 bits throws std::overflow_error.
/// Priorities (1 + w) * f are compared with this type so that search order
/// never depends on floating-point rounding.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  constexpr Rational(std::int64_t value) noexcept : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  /// Best rational approximation with denominator <= max_den (continued
  /// fractions). Decimal literals such as 0.2 or -0.5 are recovered exactly.
  static Rational from_double(double value, std::int64_t max_den = 1'000'000);

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }

  friend constexpr bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    const Int128 lhs = static_cast<Int128>(a.num_) * b.den_;
    const Int128 rhs = static_cast<Int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

 private:
  static Rational reduce(Int128 num, Int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace deastar
