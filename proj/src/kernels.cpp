#include "padic/kernels.hpp"

#include <exception>
#include <mutex>

#include <omp.h>

namespace padic {

namespace {

Integer to_integer(__int128 x) {
  const bool negative = x < 0;
  unsigned __int128 m = negative ? static_cast<unsigned __int128>(-x) : static_cast<unsigned __int128>(x);
  Integer hi(static_cast<unsigned long>(m >> 64));
  Integer out = (hi << 64) + Integer(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
  return negative ? Integer(-out) : out;
}

bool is_unit_residue(std::uint64_t a, std::int64_t p) { return a % static_cast<std::uint64_t>(p) != 0; }

// Runs body(i) for i in [0, n) across threads, rethrowing the first exception.
template <typename Body>
void parallel_for(std::int64_t n, Body body) {
  std::exception_ptr error;
  std::mutex guard;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
      std::lock_guard lock(guard);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

ClosedFormMeasure::ClosedFormMeasure(std::int64_t p, std::int64_t r, std::int64_t level,
                                     std::int64_t digits, Regularization reg)
    : p_(p), r_(r), digits_(digits), reg_(reg), modulus_(1) {
  validate_measure_parameters(p, r, level);
  if (digits < 1) throw DomainError("measure precision must be positive");
  for (std::int64_t i = 0; i < level; ++i) modulus_ *= static_cast<std::uint64_t>(p);
  const Integer q(static_cast<unsigned long>(modulus_));
  Integer inv;
  mpz_invert(inv.get_mpz_t(), Integer(static_cast<long>(r)).get_mpz_t(), q.get_mpz_t());
  r_inv_ = static_cast<__int128>(inv.get_ui());
  shift_ = (1 - static_cast<__int128>(r) * r_inv_) / static_cast<__int128>(modulus_);

  // Values are n/2 (scaled) or n/(2r) (inverse_scaled) with n an integer; for
  // p = 2 the numerator is even and the 2 is divided out exactly.
  cap_ = power_of(p, digits);
  Integer den = reg == Regularization::scaled ? Integer(1) : Integer(static_cast<long>(r));
  if (p != 2) den *= 2;
  mpz_invert(scale_.get_mpz_t(), den.get_mpz_t(), cap_.get_mpz_t());
}

PadicNumber ClosedFormMeasure::operator()(std::uint64_t a) const {
  const auto q = static_cast<__int128>(modulus_);
  const auto x = static_cast<__int128>(a);
  const auto r = static_cast<__int128>(r_);
  __int128 numerator;
  if (reg_ == Regularization::scaled) {
    // 2 E = 2 (a (1 - r r') / p^N + r floor(r' a / p^N)) + r - 1
    numerator = 2 * (x * shift_ + r * ((r_inv_ * x) / q)) + r - 1;
  } else {
    // 2 r mu = 2 floor(r a / p^N) + 1 - r
    numerator = 2 * ((r * x) / q) + 1 - r;
  }
  if (p_ == 2) numerator /= 2;
  Integer u = to_integer(numerator) * scale_;
  mpz_mod(u.get_mpz_t(), u.get_mpz_t(), cap_.get_mpz_t());
  return PadicNumber::from_parts(p_, 0, std::move(u), digits_);
}

std::vector<PadicNumber> measure_table_serial(std::int64_t p, std::int64_t r, std::int64_t level,
                                              std::int64_t digits, Regularization reg) {
  const ClosedFormMeasure mu(p, r, level, digits, reg);
  std::vector<PadicNumber> out;
  out.reserve(mu.modulus());
  for (std::uint64_t a = 0; a < mu.modulus(); ++a) out.push_back(mu(a));
  return out;
}

std::vector<PadicNumber> measure_table(std::int64_t p, std::int64_t r, std::int64_t level,
                                       std::int64_t digits, Regularization reg) {
  const ClosedFormMeasure mu(p, r, level, digits, reg);
  std::vector<PadicNumber> out(mu.modulus(), PadicNumber::zero(p));
  parallel_for(static_cast<std::int64_t>(mu.modulus()),
               [&](std::int64_t a) { out[a] = mu(static_cast<std::uint64_t>(a)); });
  return out;
}

PadicNumber integrate_units_serial(const MazurMeasure& mu, const UnitIntegrand& g) {
  PadicNumber sum = PadicNumber::zero(mu.prime());
  for (std::uint64_t a = 0; a < mu.modulus(); ++a) {
    if (!is_unit_residue(a, mu.prime())) continue;
    sum += g(a) * mu.value(a);
  }
  return sum;
}

PadicNumber integrate_units(const MazurMeasure& mu, const UnitIntegrand& g) {
  const std::int64_t p = mu.prime();
  const auto n = static_cast<std::int64_t>(mu.modulus());
  std::vector<PadicNumber> partial(static_cast<std::size_t>(omp_get_max_threads()),
                                   PadicNumber::zero(p));
  std::exception_ptr error;
  std::mutex guard;
#pragma omp parallel
  {
    PadicNumber local = PadicNumber::zero(p);
#pragma omp for schedule(static) nowait
    for (std::int64_t a = 0; a < n; ++a) {
      const auto u = static_cast<std::uint64_t>(a);
      if (!is_unit_residue(u, p)) continue;
      try {
        local += g(u) * mu.value(u);
      } catch (...) {
        std::lock_guard lock(guard);
        if (!error) error = std::current_exception();
      }
    }
    partial[static_cast<std::size_t>(omp_get_thread_num())] = std::move(local);
  }
  if (error) std::rethrow_exception(error);
  PadicNumber sum = PadicNumber::zero(p);
  for (const auto& x : partial) sum += x;
  return sum;
}

std::vector<PadicNumber> evaluate_many_serial(const MahlerSeries& f,
                                              std::span<const PadicNumber> points) {
  std::vector<PadicNumber> out;
  out.reserve(points.size());
  for (const auto& x : points) out.push_back(mahler_eval(f, x));
  return out;
}

std::vector<PadicNumber> evaluate_many(const MahlerSeries& f, std::span<const PadicNumber> points) {
  std::vector<PadicNumber> out(points.size(), PadicNumber::zero(f.prime()));
  parallel_for(static_cast<std::int64_t>(points.size()),
               [&](std::int64_t i) { out[i] = mahler_eval(f, points[i]); });
  return out;
}

}  // namespace padic
