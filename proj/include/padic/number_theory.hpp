#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace padic {

using Integer = mpz_class;
using BigRational = mpq_class;

bool is_prime(std::int64_t n);

// p^e as a big integer.
Integer power_of(std::int64_t p, std::int64_t e);

// Largest e with p^e | n; n must be nonzero.
std::int64_t valuation(const Integer& n, std::int64_t p);

// v_p(n!) by Legendre: (n - digit_sum_p(n)) / (p - 1).
std::int64_t factorial_valuation(std::uint64_t n, std::int64_t p);

// floor(log_p n) for n >= 1, i.e. the index of the leading Hensel digit.
std::int64_t floor_log(std::uint64_t n, std::int64_t p);

std::int64_t gcd(std::int64_t a, std::int64_t b);

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod);

// Smallest generator of (Z/pZ)^*.
std::int64_t smallest_primitive_root(std::int64_t p);

// Smallest integer r > 1 generating (Z/p^2 Z)^*; for p = 2 this is 3 (a
// topological generator of Z_2^* modulo -1).
std::int64_t smallest_primitive_root_mod_square(std::int64_t p);

// Baby-step giant-step: least t in [0, p-1) with g^t = a mod p. g must be a
// primitive root and a coprime to p.
std::int64_t discrete_log(std::int64_t a, std::int64_t g, std::int64_t p);

// Little-endian base-p digits of n; empty for n = 0.
struct HenselDigits {
  std::int64_t prime;
  std::vector<std::int64_t> digits;

  friend bool operator==(const HenselDigits&, const HenselDigits&) = default;
};

HenselDigits hensel_digits(std::uint64_t n, std::int64_t p);

// n with its leading Hensel digit removed: n - n_s p^s. n must be >= 1.
std::uint64_t n_minus(std::uint64_t n, std::int64_t p);

}  // namespace padic
