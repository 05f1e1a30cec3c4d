#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>

namespace padic {

// A p-adic absolute value p^(-exponent), or 0.
class AbsValue {
 public:
  static constexpr AbsValue zero(std::int64_t p) { return AbsValue(p, 0, true); }
  static constexpr AbsValue power(std::int64_t p, std::int64_t exponent) {
    return AbsValue(p, exponent, false);
  }

  constexpr std::int64_t prime() const { return p_; }
  constexpr bool is_zero() const { return zero_; }
  // Only meaningful when !is_zero().
  constexpr std::int64_t exponent() const { return exponent_; }

  double to_double() const {
    return zero_ ? 0.0 : std::pow(static_cast<double>(p_), -static_cast<double>(exponent_));
  }

  friend constexpr bool operator==(const AbsValue& a, const AbsValue& b) {
    return a.zero_ == b.zero_ && (a.zero_ || a.exponent_ == b.exponent_);
  }
  friend constexpr std::strong_ordering operator<=>(const AbsValue& a, const AbsValue& b) {
    if (a.zero_ || b.zero_) return b.zero_ <=> a.zero_;
    return b.exponent_ <=> a.exponent_;
  }

  friend constexpr AbsValue max(const AbsValue& a, const AbsValue& b) { return a < b ? b : a; }

 private:
  constexpr AbsValue(std::int64_t p, std::int64_t e, bool z) : p_(p), exponent_(e), zero_(z) {}

  std::int64_t p_;
  std::int64_t exponent_;
  bool zero_;
};

}  // namespace padic
