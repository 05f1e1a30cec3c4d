#include "padic/measure.hpp"

#include <cmath>
#include <string>

#include "padic/kernels.hpp"

namespace padic {

namespace {

BigRational b1(const BigRational& x) { return x - BigRational(1, 2); }

std::uint64_t modulus_of(std::int64_t p, std::int64_t level) {
  std::uint64_t q = 1;
  for (std::int64_t i = 0; i < level; ++i) q *= static_cast<std::uint64_t>(p);
  return q;
}

}  // namespace

void validate_measure_parameters(std::int64_t p, std::int64_t r, std::int64_t level) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (level < 1) throw DomainError("measure level must be at least 1");
  if (r < 2 || r >= (std::int64_t{1} << 31))
    throw DomainError("invalid regulator " + std::to_string(r) + ": need 2 <= r < 2^31");
  if (r % p == 0)
    throw DomainError("invalid regulator " + std::to_string(r) + ": not prime to " +
                      std::to_string(p));
  if (static_cast<double>(level) * std::log2(static_cast<double>(p)) >= 62.0)
    throw DomainError("measure level too large: p^N must stay below 2^62");
}

BigRational measure_value_exact(std::uint64_t a, std::int64_t level, std::int64_t r, std::int64_t p,
                                Regularization reg) {
  validate_measure_parameters(p, r, level);
  const std::uint64_t q = modulus_of(p, level);
  if (a >= q) throw DomainError("residue out of range");
  const Integer qz(static_cast<unsigned long>(q));
  const BigRational x(Integer(static_cast<unsigned long>(a)), qz);
  BigRational value;
  if (reg == Regularization::inverse_scaled) {
    const Integer ra = (Integer(static_cast<unsigned long>(a)) * r) % qz;
    value = b1(x) - BigRational(1, r) * b1(BigRational(ra, qz));
  } else {
    Integer r_inv;
    mpz_invert(r_inv.get_mpz_t(), Integer(static_cast<long>(r)).get_mpz_t(), qz.get_mpz_t());
    const Integer ra = (Integer(static_cast<unsigned long>(a)) * r_inv) % qz;
    value = b1(x) - BigRational(r) * b1(BigRational(ra, qz));
  }
  value.canonicalize();
  return value;
}

PadicNumber measure_value(std::uint64_t a, std::int64_t level, std::int64_t r, std::int64_t p,
                          std::int64_t digits) {
  const ClosedFormMeasure mu(p, r, level, digits, Regularization::inverse_scaled);
  if (a >= mu.modulus()) throw DomainError("residue out of range");
  return mu(a);
}

MazurMeasure::MazurMeasure(std::int64_t p, std::int64_t r, std::int64_t level, std::int64_t digits,
                           Regularization reg)
    : p_(p), r_(r), level_(level), digits_(digits), reg_(reg), modulus_(0) {
  validate_measure_parameters(p, r, level);
  if (digits < 1) throw DomainError("measure precision must be positive");
  modulus_ = modulus_of(p, level);
  values_ = measure_table(p, r, level, digits, reg);
}

PadicNumber MazurMeasure::total_mass() const {
  PadicNumber sum = PadicNumber::zero(p_);
  for (const auto& v : values_) sum += v;
  return sum;
}

bool MazurMeasure::is_refined_by(const MazurMeasure& finer) const {
  if (finer.p_ != p_ || finer.r_ != r_ || finer.reg_ != reg_ || finer.level_ != level_ + 1)
    throw DomainError("refinement check needs the same measure one level finer");
  for (std::uint64_t a = 0; a < modulus_; ++a) {
    PadicNumber sum = PadicNumber::zero(p_);
    for (std::int64_t j = 0; j < p_; ++j)
      sum += finer.value(a + static_cast<std::uint64_t>(j) * modulus_);
    if (!congruent(sum, values_[a])) return false;
  }
  return true;
}

}  // namespace padic
