#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "padic/abs_value.hpp"
#include "padic/errors.hpp"
#include "padic/number_theory.hpp"

namespace padic {

// Absolute precision of an exact zero.
inline constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max() / 4;

/**
 * Capped-precision element of Q_p.
 *
 * A nonzero value is p^valuation * unit with unit in [1, p^precision) coprime
 * to p; it is known modulo p^(valuation + precision). Zero is a separate
 * marker "0 + O(p^m)" carrying only the absolute precision m, or kExact for an
 * exact zero. Equal values at equal precision have identical fields.
 *
 * Precision rules:
 *   add/sub  absolute precision = min of the operands'
 *   mul/div  relative precision = min of the operands'
 * A sum that cancels to within its precision becomes a zero marker; it is not
 * an error. Dividing by an inexact zero throws PrecisionExhausted, dividing by
 * an exact zero throws DivisionByZero.
 */
class PadicNumber {
 public:
  static PadicNumber zero(std::int64_t p, std::int64_t known_to = kExact);
  static PadicNumber one(std::int64_t p, std::int64_t precision);
  static PadicNumber from_integer(const Integer& n, std::int64_t p, std::int64_t precision);
  static PadicNumber from_rational(const Integer& num, const Integer& den, std::int64_t p,
                                   std::int64_t precision);
  static PadicNumber from_rational(const BigRational& q, std::int64_t p, std::int64_t precision);
  // p^valuation * unit, normalizing unit (it may carry factors of p).
  static PadicNumber from_parts(std::int64_t p, std::int64_t valuation, Integer unit,
                                std::int64_t precision);
  // Little-endian unit digits; precision = digits.size().
  static PadicNumber from_digits(std::int64_t p, std::int64_t valuation,
                                 std::span<const std::int64_t> digits);

  std::int64_t prime() const { return p_; }
  bool is_zero() const { return unit_ == 0; }
  bool is_exact_zero() const { return is_zero() && val_ >= kExact; }
  // For a zero marker this is the known-to exponent.
  std::int64_t valuation() const { return val_; }
  std::int64_t precision() const { return prec_; }
  std::int64_t absolute_precision() const { return is_zero() ? val_ : val_ + prec_; }
  const Integer& unit() const { return unit_; }
  bool is_unit() const { return !is_zero() && val_ == 0; }
  bool is_integral() const { return is_zero() || val_ >= 0; }

  AbsValue abs() const { return is_zero() ? AbsValue::zero(p_) : AbsValue::power(p_, val_); }
  std::vector<std::int64_t> unit_digits() const;

  // Value modulo p^digits as an integer in [0, p^digits). Requires an
  // integral value known to at least that many digits.
  Integer residue(std::int64_t digits) const;

  PadicNumber with_absolute_precision(std::int64_t cap) const;
  PadicNumber with_precision(std::int64_t relative) const;

  PadicNumber operator-() const;
  PadicNumber pow(std::int64_t e) const;
  PadicNumber inverse() const;

  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);
  PadicNumber& operator+=(const PadicNumber& b) { return *this = *this + b; }
  PadicNumber& operator-=(const PadicNumber& b) { return *this = *this - b; }
  PadicNumber& operator*=(const PadicNumber& b) { return *this = *this * b; }

  // Field-wise identity (value and precision).
  friend bool operator==(const PadicNumber& a, const PadicNumber& b) {
    return a.p_ == b.p_ && a.val_ == b.val_ && a.prec_ == b.prec_ && a.unit_ == b.unit_;
  }

  // "…d2 d1 d0 · p^v + O(p^(v+N))"
  std::string to_string() const;

 private:
  PadicNumber(std::int64_t p, std::int64_t v, Integer u, std::int64_t n)
      : p_(p), val_(v), unit_(std::move(u)), prec_(n) {}

  // Canonical form of p^v * u known modulo p^(v+n); no prime check.
  static PadicNumber make(std::int64_t p, std::int64_t v, Integer u, std::int64_t n);

  std::int64_t p_ = 2;
  std::int64_t val_ = kExact;
  Integer unit_;
  std::int64_t prec_ = 0;
};

enum class ArithOp { add, sub, mul, div };
PadicNumber arith(const PadicNumber& a, const PadicNumber& b, ArithOp op);

// a and b agree at the smaller of their absolute precisions.
bool congruent(const PadicNumber& a, const PadicNumber& b);

// The binomial polynomial P_n(x) = x(x-1)...(x-n+1)/n! at x in Z_p. The product
// is formed modulo p^(A + v_p(n!)) for A the absolute precision of x, so the
// division by n! is exact; the result carries A - floor(log_p n) digits.
PadicNumber binomial(const PadicNumber& x, std::uint64_t n);

// q = p for odd p, 4 for p = 2.
std::int64_t principal_modulus(std::int64_t p);

// Teichmüller representative: the (p-1)th root of unity congruent to alpha
// mod p, as the limit of alpha^(p^k) with k = precision iterations. For p = 2,
// +1 or -1 by alpha mod 4.
PadicNumber teichmuller(const PadicNumber& alpha, std::int64_t precision);
PadicNumber teichmuller(const PadicNumber& alpha);

// <x> = x / teichmuller(x), a principal unit in 1 + qZ_p.
PadicNumber angle(const PadicNumber& x);

// u^s for a principal unit u and s in Z_p through the binomial series
// sum_n P_n(s) (u-1)^n.
PadicNumber unit_power(const PadicNumber& u, const PadicNumber& s);
// Integer exponent by repeated squaring; negative exponents invert.
PadicNumber unit_power(const PadicNumber& u, std::int64_t s);

}  // namespace padic
