#include "padic/random.hpp"

namespace padic {

std::uint64_t Sampler::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("empty sampling range");
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % bound;
}

PadicNumber Sampler::integer(std::int64_t p, std::int64_t precision) {
  Integer u = 0;
  for (std::int64_t i = 0; i < precision; ++i) u = u * p + static_cast<unsigned long>(below(p));
  return PadicNumber::from_parts(p, 0, std::move(u), precision);
}

PadicNumber Sampler::unit(std::int64_t p, std::int64_t precision) {
  Integer u = 1 + static_cast<unsigned long>(below(p - 1));
  Integer scale = p;
  for (std::int64_t i = 1; i < precision; ++i) {
    u += scale * static_cast<unsigned long>(below(p));
    scale *= p;
  }
  return PadicNumber::from_integer(u, p, precision);
}

std::int64_t Sampler::unit_residue(std::int64_t p) {
  return 1 + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(p - 1)));
}

MahlerSeries Sampler::mahler_series(std::int64_t p, std::size_t truncation, std::int64_t precision) {
  std::vector<PadicNumber> c;
  c.reserve(truncation);
  for (std::size_t n = 0; n < truncation; ++n) c.push_back(integer(p, precision));
  return MahlerSeries(p, std::move(c));
}

MahlerSeries Sampler::polynomial(std::int64_t p, std::size_t truncation, std::size_t degree_bound,
                                 std::int64_t precision) {
  std::vector<PadicNumber> c;
  c.reserve(truncation);
  for (std::size_t n = 0; n < truncation; ++n)
    c.push_back(n < degree_bound ? integer(p, precision) : PadicNumber::zero(p));
  return MahlerSeries(p, std::move(c));
}

}  // namespace padic
