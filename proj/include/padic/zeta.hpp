#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "padic/galois.hpp"
#include "padic/kernels.hpp"
#include "padic/measure.hpp"

namespace padic {

// B_k from B_0 = 1, sum_{j<=m} C(m+1, j) B_j = 0; B_1 = -1/2. Memoized and
// safe to call from several threads.
BigRational bernoulli(std::uint64_t k);

// Smallest primitive root mod p^2 (3 for p = 2).
std::int64_t default_regulator(std::int64_t p);

// Branches with omega^kappa0(-1) = -1 carry no zeta function; throws BranchError.
void require_even_branch(const Branch& branch);

// Largest k accepted by the interpolation path; B_k costs roughly k^3.
inline constexpr std::uint64_t kInterpolationLimit = 2048;

// -(1 - p^(k-1)) B_k / k for k = kappa0 mod (p-1) (k even when p = 2).
BigRational zeta_interp_exact(std::uint64_t k, const Branch& branch);
PadicNumber zeta_interp(std::uint64_t k, const Branch& branch, std::int64_t digits);

enum class ZetaPath { measure, interpolation };
std::string_view to_string(ZetaPath path);

struct ZetaBranchEval {
  std::int64_t p;
  std::int64_t kappa0;
  PadicNumber s;
  std::optional<std::int64_t> s_integer;
  std::int64_t regulator;  // 0 on the interpolation path
  std::int64_t level;      // 0 on the interpolation path
  PadicNumber value;
  // |value - zeta_(p,kappa0)(s)|_p <= p^-error_bound_exponent.
  std::int64_t error_bound_exponent;
  ZetaPath path;

  AbsValue error_bound() const { return AbsValue::power(p, error_bound_exponent); }
};

ZetaBranchEval zeta_interp_eval(std::uint64_t k, const Branch& branch, std::int64_t digits);

/**
 * zeta_(p,kappa0)(s) = 1/(<r>^(1-s) omega(r)^kappa0 - 1)
 *                      * int_{Z_p^*} <x>^-s omega(x)^(kappa0-1) dE_(1,r)
 * as a level-N Riemann sum against the scaled measure. With d the valuation of
 * the prefactor denominator the sum runs at N + d + 4 digits and the result is
 * within p^-(N-d). A vanishing denominator with omega(r)^kappa0 = 1 and s = 1
 * throws PoleError; any other vanishing denominator throws PrecisionExhausted.
 */
ZetaBranchEval zeta_measure(std::int64_t s, const Branch& branch, std::int64_t r, std::int64_t level);
ZetaBranchEval zeta_measure(const PadicNumber& s, const Branch& branch, std::int64_t r,
                            std::int64_t level);
// Reuses a prebuilt scaled measure; its digits must cover N + d + 4.
ZetaBranchEval zeta_measure(std::int64_t s, const Branch& branch, const MazurMeasure& mu);
ZetaBranchEval zeta_measure(const PadicNumber& s, const Branch& branch, const MazurMeasure& mu);

}  // namespace padic
