#include "padic/galois.hpp"

#include <algorithm>
#include <string>

namespace padic {

namespace {

void require_odd_prime(std::int64_t p) {
  if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
  if (p == 2) throw DomainError("the group of (p-1)th roots of unity is trivial for p = 2");
}

std::int64_t reduce_mod(std::int64_t t, std::int64_t n) { return ((t % n) + n) % n; }

}  // namespace

Branch::Branch(std::int64_t p, std::int64_t kappa0) : p_(p), kappa0_(kappa0) {
  if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
  const std::int64_t top = std::max<std::int64_t>(p - 2, 0);
  if (kappa0 < 0 || kappa0 > top)
    throw BranchError("kappa0 must lie in [0, " + std::to_string(top) + "], got " + std::to_string(kappa0));
}

PadicNumber fixed_generator(std::int64_t p, std::int64_t precision) {
  require_odd_prime(p);
  const PadicNumber g = PadicNumber::from_integer(smallest_primitive_root(p), p, precision);
  return teichmuller(g, precision);
}

std::int64_t t_of(const PadicNumber& alpha) {
  const std::int64_t p = alpha.prime();
  require_odd_prime(p);
  if (!alpha.is_unit()) throw DomainError("t_of needs a unit of Z_p");
  const auto a = static_cast<std::int64_t>(alpha.residue(1).get_si());
  return discrete_log(a, smallest_primitive_root(p), p);
}

GaloisElement::GaloisElement(PadicNumber alpha) : alpha_(std::move(alpha)), t_(t_of(alpha_)) {}

GroundState GroundState::canonical(std::int64_t p, std::size_t truncation, std::int64_t precision) {
  return {MahlerSeries::basis_vector(p, truncation, 0, precision), PadicNumber::one(p, precision)};
}

GroundState rho_apply(const Branch& branch, const GaloisElement& alpha, const GroundState& v) {
  if (branch.prime() != alpha.prime()) throw PrimeMismatch(branch.prime(), alpha.prime());
  if (branch.prime() != v.prime()) throw PrimeMismatch(branch.prime(), v.prime());
  const std::int64_t digits = std::max<std::int64_t>(v.scale.precision(), 1);
  const PadicNumber w = teichmuller(alpha.alpha(), digits);
  return {v.omega, v.scale * w.pow(branch.kappa0())};
}

OperatorMatrix rho_prime_apply(const Branch& branch, std::int64_t t, const OperatorMatrix& a) {
  const std::int64_t p = branch.prime();
  if (p != a.prime()) throw PrimeMismatch(p, a.prime());
  require_odd_prime(p);
  const std::int64_t e = reduce_mod(branch.kappa0() * reduce_mod(t, p - 1), p - 1);
  if (e == 0) return a;
  std::int64_t digits = 1;
  for (const auto& entry : a.nonzero_entries())
    if (!entry.value.is_zero()) digits = std::max(digits, entry.value.precision());
  return a.scaled(fixed_generator(p, digits).pow(e));
}

OrbitReport orbit(const Branch& branch, const OperatorMatrix& a) {
  const std::int64_t p = branch.prime();
  require_odd_prime(p);
  if (a.is_zero()) throw DomainError("orbit of the zero operator");
  OrbitReport report{p, branch.kappa0(), 0, {}};
  for (std::int64_t t = 0; t < p - 1; ++t) report.orbit.push_back(rho_prime_apply(branch, t, a));
  for (std::int64_t t = 1; t <= p - 1; ++t) {
    const OperatorMatrix& image = t < p - 1 ? report.orbit[static_cast<std::size_t>(t)]
                                            : rho_prime_apply(branch, t, a);
    if (congruent(image, a)) {
      report.period = t;
      break;
    }
  }
  return report;
}

}  // namespace padic
