#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "padic/padic_number.hpp"

namespace padic {

enum class Basis { mahler, van_der_put };

/**
 * Truncated expansion of an element of C(Z_p, Q_p) in one of the two
 * orthonormal bases: the first M coefficients plus a bound on the sup of
 * |coefficient| over the omitted indices n >= M. A zero tail bound means the
 * stored coefficients are the whole expansion.
 *
 *   Mahler:        f(x) = sum_n c_n P_n(x)
 *   van der Put:   f(x) = sum_n v_n e_n(x)
 */
template <Basis B>
class Series {
 public:
  Series(std::int64_t p, std::vector<PadicNumber> coefficients, AbsValue tail_bound)
      : p_(p), coeffs_(std::move(coefficients)), tail_(tail_bound) {
    if (coeffs_.empty()) throw DomainError("series needs at least one coefficient");
    if (tail_.prime() != p_) throw PrimeMismatch(p_, tail_.prime());
    for (const auto& c : coeffs_)
      if (c.prime() != p_) throw PrimeMismatch(p_, c.prime());
  }
  Series(std::int64_t p, std::vector<PadicNumber> coefficients)
      : Series(p, std::move(coefficients), AbsValue::zero(p)) {}

  // The single basis element with index n at the given precision.
  static Series basis_vector(std::int64_t p, std::size_t truncation, std::size_t n,
                             std::int64_t precision) {
    std::vector<PadicNumber> c(truncation, PadicNumber::zero(p));
    c.at(n) = PadicNumber::one(p, precision);
    return Series(p, std::move(c));
  }
  static Series zero(std::int64_t p, std::size_t truncation) {
    return Series(p, std::vector<PadicNumber>(truncation, PadicNumber::zero(p)));
  }

  static constexpr Basis basis() { return B; }
  std::int64_t prime() const { return p_; }
  std::size_t truncation() const { return coeffs_.size(); }
  const std::vector<PadicNumber>& coefficients() const { return coeffs_; }
  const PadicNumber& operator[](std::size_t n) const { return coeffs_[n]; }
  AbsValue tail_bound() const { return tail_; }
  bool is_finite() const { return tail_.is_zero(); }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::int64_t p_;
  std::vector<PadicNumber> coeffs_;
  AbsValue tail_;
};

// Coefficient-wise linear combinations; tails combine by max.
template <Basis B>
Series<B> operator+(const Series<B>& a, const Series<B>& b) {
  if (a.prime() != b.prime()) throw PrimeMismatch(a.prime(), b.prime());
  if (a.truncation() != b.truncation()) throw DomainError("truncation mismatch");
  std::vector<PadicNumber> c;
  c.reserve(a.truncation());
  for (std::size_t n = 0; n < a.truncation(); ++n) c.push_back(a[n] + b[n]);
  return Series<B>(a.prime(), std::move(c), max(a.tail_bound(), b.tail_bound()));
}

template <Basis B>
Series<B> operator-(const Series<B>& a) {
  std::vector<PadicNumber> c;
  c.reserve(a.truncation());
  for (const auto& x : a.coefficients()) c.push_back(-x);
  return Series<B>(a.prime(), std::move(c), a.tail_bound());
}

template <Basis B>
Series<B> operator-(const Series<B>& a, const Series<B>& b) {
  return a + (-b);
}

// Tail scales by |c|.
template <Basis B>
Series<B> operator*(const PadicNumber& s, const Series<B>& a) {
  std::vector<PadicNumber> c;
  c.reserve(a.truncation());
  for (const auto& x : a.coefficients()) c.push_back(s * x);
  AbsValue tail = a.tail_bound();
  if (s.is_zero())
    tail = AbsValue::zero(a.prime());
  else if (!tail.is_zero())
    tail = AbsValue::power(a.prime(), tail.exponent() + s.valuation());
  return Series<B>(a.prime(), std::move(c), tail);
}

using MahlerSeries = Series<Basis::mahler>;
using VanDerPutSeries = Series<Basis::van_der_put>;

// P_n(x).
PadicNumber mahler_basis_eval(std::uint64_t n, const PadicNumber& x);

// sum_{n<M} c_n P_n(x); a nonzero tail bound p^-k caps the absolute precision
// of the result at k.
PadicNumber mahler_eval(const MahlerSeries& f, const PadicNumber& x);

// Mahler coefficients from samples f(0), ..., f(M'-1) by forward differences,
// c_n = (Delta^n f)(0). No division occurs, so the coefficients are exact at
// sample precision. The tail bound is a heuristic: the largest |c_n| over the
// extra window M <= n < M' (or |c_(M-1)| when M' = M).
MahlerSeries mahler_expand(std::span<const PadicNumber> samples, std::size_t truncation);
// Samples the oracle on 0..window-1; window defaults to 2M.
MahlerSeries mahler_expand(const std::function<PadicNumber(std::uint64_t)>& oracle,
                           std::size_t truncation, std::size_t window = 0);

// e_n(x): e_0 = 1; for p^s <= n < p^(s+1), 1 iff x = n mod p^(s+1).
// Throws PrecisionExhausted if x does not carry s+1 digits.
bool vdp_basis_eval(std::uint64_t n, const PadicNumber& x);

// v_0 = f(0), v_n = f(n) - f(n_-). Tail bound heuristic: the largest |v_n|
// over the extra window when samples.size() > M, else over the top stored
// level p^s <= n < M.
VanDerPutSeries vdp_expand(std::span<const PadicNumber> samples, std::size_t truncation);
VanDerPutSeries vdp_expand(std::span<const PadicNumber> samples);
VanDerPutSeries vdp_expand(const std::function<PadicNumber(std::uint64_t)>& oracle,
                           std::size_t truncation);

PadicNumber vdp_eval(const VanDerPutSeries& g, const PadicNumber& x);

// Value at a nonnegative integer. For n < M the truncated sum already equals
// f(n) whatever the tail (P_j(n) = 0 for j > n, e_m(n) = 0 for m > n).
PadicNumber sample_at(const MahlerSeries& f, std::uint64_t n);
PadicNumber sample_at(const VanDerPutSeries& g, std::uint64_t n);

// Mahler -> van der Put with the same M. Exact on 0..M-1. The tail bound is
// rigorous: for n >= M, |v_n| <= max_j |c_j| p^(floor(log_p j) - floor(log_p M))
// since |P_j(x) - P_j(y)| <= p^floor(log_p j) |x - y| and |n - n_-| <= p^-floor(log_p M).
VanDerPutSeries to_van_der_put(const MahlerSeries& f);

// van der Put -> Mahler on the first M <= g.truncation() samples. Coefficients
// are those of the degree < M interpolant; the tail bound combines g's tail
// with the same Lipschitz estimate applied to the interpolant.
MahlerSeries to_mahler(const VanDerPutSeries& g, std::size_t truncation);

// max |coefficient| combined with the tail bound; exact when the tail is zero.
AbsValue sup_norm(const MahlerSeries& f);
AbsValue sup_norm(const VanDerPutSeries& g);

}  // namespace padic
