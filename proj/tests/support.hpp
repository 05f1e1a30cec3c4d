#pragma once

#include "padic/padic_number.hpp"

namespace test {

using padic::Integer;
using padic::PadicNumber;

inline PadicNumber Z(long n, std::int64_t p, std::int64_t precision) {
  return PadicNumber::from_integer(Integer(n), p, precision);
}

inline PadicNumber Q(long num, long den, std::int64_t p, std::int64_t precision) {
  return PadicNumber::from_rational(Integer(num), Integer(den), p, precision);
}

// x mod p^digits as a plain integer.
inline long residue(const PadicNumber& x, std::int64_t digits) { return x.residue(digits).get_si(); }

}  // namespace test

namespace test {

// Exponent k with |a - b|_p <= p^-k; for agreement to full precision this is
// the known-to exponent of the difference.
inline std::int64_t gap(const PadicNumber& a, const PadicNumber& b) { return (a - b).valuation(); }

}  // namespace test
