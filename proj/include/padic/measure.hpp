#pragma once

#include <cstdint>
#include <vector>

#include "padic/padic_number.hpp"

namespace padic {

/**
 * Regularizations of the first Bernoulli distribution
 * mu_B(a + p^N Z_p) = B1(a/p^N), B1(x) = x - 1/2, by an integer r prime to p:
 *
 *   inverse_scaled   mu_{1,r}(U) = mu_B(U) - r^-1 mu_B(rU)
 *                    = r^-1 floor(r a / p^N) + (r^-1 - 1)/2
 *   scaled           E_{1,r}(U)  = mu_B(U) - r mu_B(r^-1 U)
 *                    = a (1 - r r')/p^N + r floor(r' a / p^N) + (r - 1)/2,
 *                      r' = r^-1 mod p^N
 *
 * Both are Z_p-valued measures. The zeta prefactor 1/(<r>^(1-s) omega(r)^k0 - 1)
 * pairs with the scaled form: against it, x^(k-1) integrates over Z_p^* to
 * (1 - p^(k-1)) (1 - r^k) B_k / k.
 */
enum class Regularization { inverse_scaled, scaled };

// Exact value of the measure on a + p^level Z_p.
BigRational measure_value_exact(std::uint64_t a, std::int64_t level, std::int64_t r, std::int64_t p,
                                Regularization reg);

// mu_{1,r}(a + p^level Z_p) embedded at the given absolute precision.
PadicNumber measure_value(std::uint64_t a, std::int64_t level, std::int64_t r, std::int64_t p,
                          std::int64_t digits);

// Checks p prime, gcd(r, p) = 1, r > 1, p^level < 2^62.
void validate_measure_parameters(std::int64_t p, std::int64_t r, std::int64_t level);

// The level-N value table a -> mu(a + p^N Z_p), a in [0, p^N).
class MazurMeasure {
 public:
  MazurMeasure(std::int64_t p, std::int64_t r, std::int64_t level, std::int64_t digits,
               Regularization reg = Regularization::scaled);

  std::int64_t prime() const { return p_; }
  std::int64_t regulator() const { return r_; }
  std::int64_t level() const { return level_; }
  std::int64_t digits() const { return digits_; }
  Regularization regularization() const { return reg_; }
  std::uint64_t modulus() const { return modulus_; }
  const PadicNumber& value(std::uint64_t a) const { return values_.at(a); }
  const std::vector<PadicNumber>& values() const { return values_; }

  // mu(Z_p), the sum of all level-N values.
  PadicNumber total_mass() const;

  // mu(a + p^N) = sum_j mu(a + j p^N + p^(N+1)) for every residue a, where
  // finer is the same measure one level down.
  bool is_refined_by(const MazurMeasure& finer) const;

 private:
  std::int64_t p_;
  std::int64_t r_;
  std::int64_t level_;
  std::int64_t digits_;
  Regularization reg_;
  std::uint64_t modulus_;
  std::vector<PadicNumber> values_;
};

}  // namespace padic
