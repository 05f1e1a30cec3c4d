#pragma once

// Data-parallel kernels. Each parallel kernel has a serial reference with the
// same signature; p-adic addition is exact modular arithmetic with min-precision
// tracking, so both produce bit-identical results in any reduction order.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "padic/function_space.hpp"
#include "padic/measure.hpp"

namespace padic {

// Closed-form evaluation of a level-N measure at absolute precision digits.
class ClosedFormMeasure {
 public:
  ClosedFormMeasure(std::int64_t p, std::int64_t r, std::int64_t level, std::int64_t digits,
                    Regularization reg);
  std::uint64_t modulus() const { return modulus_; }
  PadicNumber operator()(std::uint64_t a) const;

 private:
  std::int64_t p_;
  std::int64_t r_;
  std::int64_t digits_;
  Regularization reg_;
  std::uint64_t modulus_;
  __int128 r_inv_ = 0;  // r^-1 mod p^N
  __int128 shift_ = 0;  // (1 - r r^-1) / p^N
  Integer scale_;       // inverse of the odd part of the denominator mod p^digits
  Integer cap_;         // p^digits
};

// Closed-form measure values for every residue a in [0, p^level).
std::vector<PadicNumber> measure_table(std::int64_t p, std::int64_t r, std::int64_t level,
                                       std::int64_t digits, Regularization reg);
std::vector<PadicNumber> measure_table_serial(std::int64_t p, std::int64_t r, std::int64_t level,
                                              std::int64_t digits, Regularization reg);

using UnitIntegrand = std::function<PadicNumber(std::uint64_t)>;

// Riemann sum over the unit residues a in (Z/p^N)^*: sum g(a) mu(a + p^N Z_p).
PadicNumber integrate_units(const MazurMeasure& mu, const UnitIntegrand& g);
PadicNumber integrate_units_serial(const MazurMeasure& mu, const UnitIntegrand& g);

// f evaluated at every point.
std::vector<PadicNumber> evaluate_many(const MahlerSeries& f, std::span<const PadicNumber> points);
std::vector<PadicNumber> evaluate_many_serial(const MahlerSeries& f,
                                              std::span<const PadicNumber> points);

}  // namespace padic
