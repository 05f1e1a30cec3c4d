#include "padic/zeta.hpp"

#include <mutex>
#include <string>
#include <vector>

namespace padic {

namespace {

// Digits carried by the report copy of an integer argument.
constexpr std::int64_t kIntegerDigits = 64;

struct Exponent {
  std::optional<std::int64_t> integer;
  PadicNumber padic;
};

void check_branch_prime(const Branch& branch, std::int64_t p) {
  if (branch.prime() != p) throw PrimeMismatch(branch.prime(), p);
}

PadicNumber one_minus(const Exponent& s, std::int64_t p, std::int64_t digits) {
  return PadicNumber::one(p, digits) - s.padic;
}

// <r>^(1-s) omega(r)^kappa0 - 1 at the given precision.
PadicNumber prefactor_denominator(const Exponent& s, std::int64_t kappa0, std::int64_t r,
                                  std::int64_t p, std::int64_t digits) {
  const PadicNumber big_r = PadicNumber::from_integer(Integer(static_cast<long>(r)), p, digits);
  const PadicNumber w = teichmuller(big_r, digits);
  const PadicNumber ang = big_r / w;
  const PadicNumber base =
      s.integer ? unit_power(ang, 1 - *s.integer) : unit_power(ang, one_minus(s, p, digits));
  return base * w.pow(kappa0) - PadicNumber::one(p, digits);
}

bool omega_power_trivial(std::int64_t kappa0, std::int64_t r, std::int64_t p) {
  const PadicNumber big_r = PadicNumber::from_integer(Integer(static_cast<long>(r)), p, 4);
  return (teichmuller(big_r, 4).pow(kappa0) - PadicNumber::one(p, 4)).is_zero();
}

bool exponent_is_one(const Exponent& s, std::int64_t p) {
  if (s.integer) return *s.integer == 1;
  if (s.padic.is_zero()) return false;
  return (s.padic - PadicNumber::one(p, std::max<std::int64_t>(s.padic.absolute_precision(), 1))).is_zero();
}

ZetaBranchEval evaluate(const Exponent& s, const Branch& branch, const MazurMeasure* prebuilt,
                        std::int64_t r, std::int64_t level) {
  const std::int64_t p = branch.prime();
  require_even_branch(branch);
  validate_measure_parameters(p, r, level);
  if (p == 2 && level < 2) throw DomainError("p = 2 needs level >= 2");
  if (!s.padic.is_integral()) throw DomainError("zeta argument must lie in Z_p");
  const std::int64_t kappa0 = branch.kappa0();

  const PadicNumber probe = prefactor_denominator(s, kappa0, r, p, level + 16);
  if (probe.is_zero()) {
    if (exponent_is_one(s, p) && omega_power_trivial(kappa0, r, p))
      throw PoleError("pole/indeterminate at this branch point: kappa0 = " +
                      std::to_string(kappa0) + ", s = 1");
    throw PrecisionExhausted("prefactor denominator vanishes to " +
                             std::to_string(probe.valuation()) + " digits");
  }
  const std::int64_t d = probe.valuation();
  std::int64_t working = level + d + 4;
  if (prebuilt) {
    if (prebuilt->digits() < working)
      throw PrecisionExhausted("measure table carries " + std::to_string(prebuilt->digits()) +
                               " digits, needs " + std::to_string(working));
    working = prebuilt->digits();
  }
  const PadicNumber den = prefactor_denominator(s, kappa0, r, p, working + d);

  std::optional<MazurMeasure> owned;
  if (!prebuilt) owned.emplace(p, r, level, working, Regularization::scaled);
  const MazurMeasure& mu = prebuilt ? *prebuilt : *owned;

  // omega depends only on x mod q; tabulate what the integrand needs per class.
  const std::int64_t q = principal_modulus(p);
  std::vector<PadicNumber> twist(static_cast<std::size_t>(q), PadicNumber::zero(p));
  std::vector<PadicNumber> omega_inv(static_cast<std::size_t>(q), PadicNumber::zero(p));
  for (std::int64_t b = 1; b < q; ++b) {
    if (b % p == 0) continue;
    const PadicNumber w = teichmuller(PadicNumber::from_integer(Integer(static_cast<long>(b)), p, working), working);
    omega_inv[b] = w.inverse();
    // <x>^-s omega^(kappa0-1) = x^-s omega^(s+kappa0-1) for integer s
    twist[b] = s.integer ? w.pow(*s.integer + kappa0 - 1) : w.pow(kappa0 - 1);
  }
  const auto uq = static_cast<std::uint64_t>(q);
  UnitIntegrand g;
  if (s.integer) {
    const std::int64_t e = -*s.integer;
    g = [&, e](std::uint64_t a) {
      const PadicNumber x = PadicNumber::from_integer(Integer(static_cast<unsigned long>(a)), p, working);
      return x.pow(e) * twist[a % uq];
    };
  } else {
    const PadicNumber minus_s = -s.padic;
    g = [&, minus_s](std::uint64_t a) {
      const PadicNumber x = PadicNumber::from_integer(Integer(static_cast<unsigned long>(a)), p, working);
      return unit_power(x * omega_inv[a % uq], minus_s) * twist[a % uq];
    };
  }
  const PadicNumber integral = integrate_units(mu, g);
  PadicNumber value = integral / den;
  const std::int64_t bound = std::min(level - d, value.absolute_precision());
  return ZetaBranchEval{p, kappa0, s.padic, s.integer, r, level, std::move(value), bound,
                        ZetaPath::measure};
}

Exponent integer_exponent(std::int64_t s, std::int64_t p) {
  return {s, s == 0 ? PadicNumber::zero(p) : PadicNumber::from_integer(Integer(static_cast<long>(s)), p, kIntegerDigits)};
}

}  // namespace

BigRational bernoulli(std::uint64_t k) {
  static std::mutex guard;
  static std::vector<BigRational> table{BigRational(1)};
  std::lock_guard lock(guard);
  while (table.size() <= k) {
    const std::uint64_t m = table.size();
    BigRational sum = 0;
    Integer c = 1;  // C(m+1, j)
    for (std::uint64_t j = 0; j < m; ++j) {
      sum += BigRational(c) * table[j];
      c = c * static_cast<unsigned long>(m + 1 - j) / static_cast<unsigned long>(j + 1);
    }
    BigRational b = -sum / BigRational(static_cast<unsigned long>(m + 1));
    b.canonicalize();
    table.push_back(b);
  }
  return table[k];
}

std::int64_t default_regulator(std::int64_t p) { return smallest_primitive_root_mod_square(p); }

void require_even_branch(const Branch& branch) {
  if (!branch.is_even())
    throw BranchError("odd branch kappa0 = " + std::to_string(branch.kappa0()) +
                      ": omega^kappa0(-1) = -1, the zeta function needs an even branch");
}

BigRational zeta_interp_exact(std::uint64_t k, const Branch& branch) {
  require_even_branch(branch);
  const std::int64_t p = branch.prime();
  if (k < 1) throw DomainError("zeta_interp needs k >= 1");
  if (k > kInterpolationLimit)
    throw DomainError("zeta_interp supports k <= " + std::to_string(kInterpolationLimit));
  const bool matched = p == 2 ? k % 2 == 0
                              : (static_cast<std::int64_t>(k % static_cast<std::uint64_t>(p - 1)) ==
                                 branch.kappa0() % (p - 1));
  if (!matched)
    throw BranchError("branch mismatch: k = " + std::to_string(k) + " is not congruent to kappa0 = " +
                      std::to_string(branch.kappa0()) + " mod " + std::to_string(p - 1) +
                      (p == 2 ? " (p = 2 needs even k)" : ""));
  const BigRational euler = 1 - BigRational(power_of(p, static_cast<std::int64_t>(k) - 1));
  BigRational value = -euler * bernoulli(k) / BigRational(static_cast<unsigned long>(k));
  value.canonicalize();
  return value;
}

PadicNumber zeta_interp(std::uint64_t k, const Branch& branch, std::int64_t digits) {
  const BigRational q = zeta_interp_exact(k, branch);
  if (q == 0) return PadicNumber::zero(branch.prime());
  return PadicNumber::from_rational(q, branch.prime(), digits);
}

std::string_view to_string(ZetaPath path) {
  return path == ZetaPath::measure ? "measure" : "interpolation";
}

ZetaBranchEval zeta_interp_eval(std::uint64_t k, const Branch& branch, std::int64_t digits) {
  const std::int64_t p = branch.prime();
  PadicNumber value = zeta_interp(k, branch, digits);
  const std::int64_t s = 1 - static_cast<std::int64_t>(k);
  const std::int64_t bound = value.absolute_precision();
  return ZetaBranchEval{p, branch.kappa0(), integer_exponent(s, p).padic, s, 0, 0,
                        std::move(value), bound, ZetaPath::interpolation};
}

ZetaBranchEval zeta_measure(std::int64_t s, const Branch& branch, std::int64_t r, std::int64_t level) {
  return evaluate(integer_exponent(s, branch.prime()), branch, nullptr, r, level);
}

ZetaBranchEval zeta_measure(const PadicNumber& s, const Branch& branch, std::int64_t r,
                            std::int64_t level) {
  check_branch_prime(branch, s.prime());
  return evaluate({std::nullopt, s}, branch, nullptr, r, level);
}

ZetaBranchEval zeta_measure(std::int64_t s, const Branch& branch, const MazurMeasure& mu) {
  check_branch_prime(branch, mu.prime());
  if (mu.regularization() != Regularization::scaled)
    throw DomainError("zeta_measure integrates against the scaled regularization");
  return evaluate(integer_exponent(s, branch.prime()), branch, &mu, mu.regulator(), mu.level());
}

ZetaBranchEval zeta_measure(const PadicNumber& s, const Branch& branch, const MazurMeasure& mu) {
  check_branch_prime(branch, mu.prime());
  check_branch_prime(branch, s.prime());
  if (mu.regularization() != Regularization::scaled)
    throw DomainError("zeta_measure integrates against the scaled regularization");
  return evaluate({std::nullopt, s}, branch, &mu, mu.regulator(), mu.level());
}

}  // namespace padic
