#pragma once

#include <cstdint>
#include <random>

#include "padic/function_space.hpp"

namespace padic {

// Seeded source of test data. Draws come straight from mt19937_64, whose
// output sequence is fixed by the standard, so a seed reproduces the same
// values on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);

  // Uniform element of Z_p known to the given absolute precision.
  PadicNumber integer(std::int64_t p, std::int64_t precision);
  // Uniform element of Z_p^*.
  PadicNumber unit(std::int64_t p, std::int64_t precision);
  // Uniform residue in [1, p).
  std::int64_t unit_residue(std::int64_t p);

  // M coefficients drawn from Z_p at the given precision, zero tail.
  MahlerSeries mahler_series(std::int64_t p, std::size_t truncation, std::int64_t precision);
  // Polynomial of degree < degree_bound stored with M coefficients.
  MahlerSeries polynomial(std::int64_t p, std::size_t truncation, std::size_t degree_bound,
                          std::int64_t precision);

 private:
  std::mt19937_64 engine_;
};

}  // namespace padic
