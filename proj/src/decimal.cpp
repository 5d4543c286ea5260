#include "ppers/decimal.hpp"

#include "ppers/error.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

namespace ppers {

namespace {

using i128 = __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

i128 pow10(int e) {
  i128 r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

bool fits(i128 v) { return v <= kMax && v >= -kMax; }

}  // namespace

std::optional<Decimal> Decimal::parse(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  i128 mantissa = 0;
  int scale = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      any_digit = true;
      mantissa = mantissa * 10 + (c - '0');
      if (seen_point) ++scale;
      if (!fits(mantissa)) return std::nullopt;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) return std::nullopt;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') return std::nullopt;
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    if (i == text.size()) return std::nullopt;
    int exponent = 0;
    for (; i < text.size(); ++i) {
      char c = text[i];
      if (c < '0' || c > '9') return std::nullopt;
      exponent = exponent * 10 + (c - '0');
      if (exponent > 40) return std::nullopt;
    }
    scale += exp_negative ? exponent : -exponent;
  }
  if (scale < 0) {
    mantissa *= pow10(-scale);
    scale = 0;
    if (!fits(mantissa)) return std::nullopt;
  }
  if (scale > 36) return std::nullopt;
  Decimal d(static_cast<std::int64_t>(negative ? -mantissa : mantissa), scale);
  d.normalize();
  return d;
}

void Decimal::normalize() {
  if (mantissa_ == 0) {
    scale_ = 0;
    return;
  }
  while (scale_ > 0 && mantissa_ % 10 == 0) {
    mantissa_ /= 10;
    --scale_;
  }
}

double Decimal::to_double() const {
  // Round-trips through the decimal text so the conversion is correctly rounded.
  return std::strtod(to_string().c_str(), nullptr);
}

std::string Decimal::to_string() const {
  std::string digits = std::to_string(mantissa_ < 0 ? -mantissa_ : mantissa_);
  if (scale_ > 0) {
    if (static_cast<int>(digits.size()) <= scale_) {
      digits.insert(0, static_cast<std::size_t>(scale_ - static_cast<int>(digits.size()) + 1), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(scale_), ".");
  }
  return mantissa_ < 0 ? "-" + digits : digits;
}

Decimal Decimal::operator+(const Decimal& other) const {
  int scale = std::max(scale_, other.scale_);
  i128 sum = static_cast<i128>(mantissa_) * pow10(scale - scale_) +
             static_cast<i128>(other.mantissa_) * pow10(scale - other.scale_);
  if (!fits(sum)) throw Error("decimal overflow in addition");
  Decimal d(static_cast<std::int64_t>(sum), scale);
  d.normalize();
  return d;
}

Decimal Decimal::operator-() const { return Decimal(-mantissa_, scale_); }

Decimal Decimal::operator-(const Decimal& other) const { return *this + (-other); }

std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) {
  int scale = std::max(a.scale_, b.scale_);
  i128 lhs = static_cast<i128>(a.mantissa_) * pow10(scale - a.scale_);
  i128 rhs = static_cast<i128>(b.mantissa_) * pow10(scale - b.scale_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace ppers
