#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ppers {

/// Exact decimal number `mantissa * 10^-scale`. Weights and filtration grades
/// are compared with this type so that ties in the input stay ties.
class Decimal {
 public:
  constexpr Decimal() = default;
  constexpr Decimal(std::int64_t integer) : mantissa_(integer) {}

  /// Accepts `[+-]digits[.digits][(e|E)[+-]digits]`. Returns nullopt on
  /// anything else, including overflow of the 64-bit mantissa.
  static std::optional<Decimal> parse(std::string_view text);

  std::int64_t mantissa() const { return mantissa_; }
  int scale() const { return scale_; }

  double to_double() const;
  /// Shortest plain decimal rendering, e.g. "1.5", "-3", "0.001".
  std::string to_string() const;

  Decimal operator+(const Decimal& other) const;
  Decimal operator-(const Decimal& other) const;
  Decimal operator-() const;

  friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b);
  friend bool operator==(const Decimal& a, const Decimal& b) { return (a <=> b) == 0; }

 private:
  constexpr Decimal(std::int64_t mantissa, int scale) : mantissa_(mantissa), scale_(scale) {}
  void normalize();

  std::int64_t mantissa_ = 0;
  int scale_ = 0;
};

}  // namespace ppers
