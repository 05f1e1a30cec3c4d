#include <doctest.h>

#include <algorithm>

#include "padic/random.hpp"
#include "padic/zeta.hpp"
#include "support.hpp"

using namespace padic;
using test::gap;
using test::Q;
using test::Z;

namespace {

// Akiyama-Tanigawa; yields B_n with B_1 = +1/2.
BigRational akiyama_tanigawa(unsigned n) {
  std::vector<BigRational> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = BigRational(1, m + 1);
    for (unsigned j = m; j >= 1; --j) {
      a[j - 1] = j * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
  }
  return a[0];
}

}  // namespace

TEST_CASE("bernoulli examples") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == BigRational(-1, 2));
  CHECK(bernoulli(2) == BigRational(1, 6));
  CHECK(bernoulli(4) == BigRational(-1, 30));
  CHECK(bernoulli(12) == BigRational(-691, 2730));
  for (unsigned k = 3; k <= 31; k += 2) CHECK(bernoulli(k) == 0);
}

TEST_CASE("bernoulli against Akiyama-Tanigawa") {
  for (unsigned n = 2; n <= 40; ++n) CHECK(bernoulli(n) == akiyama_tanigawa(n));
}

TEST_CASE("von Staudt-Clausen denominators") {
  for (unsigned k = 2; k <= 30; k += 2) {
    Integer expected = 1;
    for (unsigned q = 2; q <= k + 1; ++q)
      if (is_prime(q) && k % (q - 1) == 0) expected *= q;
    CHECK(bernoulli(k).get_den() == expected);
  }
}

TEST_CASE("measure examples") {
  CHECK(measure_value_exact(3, 1, 2, 5, Regularization::inverse_scaled) == BigRational(1, 4));
  CHECK(measure_value(3, 1, 2, 5, 20) == Q(1, 4, 5, 20));
  const MazurMeasure coarse(5, 2, 1, 20, Regularization::inverse_scaled);
  const MazurMeasure fine(5, 2, 2, 20, Regularization::inverse_scaled);
  PadicNumber sum = PadicNumber::zero(5);
  for (std::uint64_t j = 0; j < 5; ++j) sum += fine.value(5 * j);
  CHECK(sum == coarse.value(0));
  CHECK(coarse.is_refined_by(fine));
}

TEST_CASE("closed form matches the two-term definition") {
  for (auto reg : {Regularization::inverse_scaled, Regularization::scaled}) {
    for (std::int64_t p : {2, 3, 5, 7}) {
      for (std::int64_t r : {3, 11, 12}) {
        if (r % p == 0) continue;
        for (std::int64_t n = 1; n <= 3; ++n) {
          const MazurMeasure mu(p, r, n, 16, reg);
          for (std::uint64_t a = 0; a < mu.modulus(); ++a)
            REQUIRE(mu.value(a) == PadicNumber::from_rational(measure_value_exact(a, n, r, p, reg), p, 16)
                                       .with_absolute_precision(16));
        }
      }
    }
  }
}

TEST_CASE("distribution property") {
  for (auto reg : {Regularization::inverse_scaled, Regularization::scaled}) {
    for (std::int64_t p : {3, 5, 7}) {
      for (std::int64_t n = 1; n < 4; ++n) {
        const MazurMeasure coarse(p, 2, n, 12, reg);
        const MazurMeasure fine(p, 2, n + 1, 12, reg);
        CHECK(coarse.is_refined_by(fine));
      }
    }
  }
  CHECK_THROWS_AS(MazurMeasure(5, 2, 2, 10).is_refined_by(MazurMeasure(5, 3, 3, 10)), DomainError);
}

TEST_CASE("total mass and boundedness") {
  for (auto reg : {Regularization::inverse_scaled, Regularization::scaled}) {
    for (std::int64_t p : {3, 5, 7}) {
      const auto mass = MazurMeasure(p, 2, 1, 16, reg).total_mass();
      for (std::int64_t n = 2; n <= 3; ++n) {
        const MazurMeasure mu(p, 2, n, 16, reg);
        CHECK(mu.total_mass() == mass);
        for (const auto& v : mu.values()) REQUIRE(v.is_integral());
      }
    }
  }
}

TEST_CASE("measure parameter validation") {
  CHECK_THROWS_AS(validate_measure_parameters(4, 3, 2), DomainError);
  CHECK_THROWS_AS(validate_measure_parameters(5, 10, 2), DomainError);
  CHECK_THROWS_AS(validate_measure_parameters(5, 1, 2), DomainError);
  CHECK_THROWS_AS(validate_measure_parameters(5, 2, 0), DomainError);
  CHECK_THROWS_AS(validate_measure_parameters(5, 2, 30), DomainError);
  CHECK_NOTHROW(validate_measure_parameters(5, 2, 20));
  CHECK_THROWS_AS(measure_value(25, 2, 2, 5, 10), DomainError);
}

TEST_CASE("riemann sums") {
  const std::int64_t p = 5;
  auto zero = [&](std::uint64_t) { return PadicNumber::zero(p); };
  auto one = [&](std::uint64_t) { return PadicNumber::one(p, 20); };
  auto identity = [&](std::uint64_t a) { return PadicNumber::from_integer(Integer(static_cast<unsigned long>(a)), p, 20); };

  CHECK(integrate_units(MazurMeasure(p, 2, 3, 20), zero).is_zero());

  for (auto reg : {Regularization::inverse_scaled, Regularization::scaled}) {
    std::vector<PadicNumber> ones, xs;
    for (std::int64_t n = 3; n <= 5; ++n) {
      const MazurMeasure mu(p, 2, n, 20, reg);
      ones.push_back(integrate_units(mu, one));
      xs.push_back(integrate_units(mu, identity));
    }
    // the indicator of Z_p^* is locally constant at level 1
    CHECK(ones[0] == ones[1]);
    CHECK(ones[1] == ones[2]);
    // differences shrink by p per level until they vanish at working precision
    CHECK(gap(xs[2], xs[1]) >= std::min<std::int64_t>(gap(xs[1], xs[0]) + 1, 20));
  }
  // against E_(1,r), x integrates over Z_p^* to (1 - p)(1 - r^2) B_2 / 2
  const auto exact = Q((1 - p) * (1 - 4), 12, p, 20);
  CHECK(gap(integrate_units(MazurMeasure(p, 2, 5, 20), identity), exact) >= 5);
}

TEST_CASE("interpolation examples") {
  CHECK(zeta_interp_exact(2, Branch(2, 0)) == BigRational(1, 12));
  CHECK(zeta_interp_exact(4, Branch(2, 0)) == BigRational(-7, 120));
  CHECK(zeta_interp_exact(2, Branch(5, 2)) == BigRational(1, 3));
  const auto v = zeta_interp(2, Branch(2, 0), 32);
  CHECK(v.valuation() == -2);
  CHECK(v == Q(1, 12, 2, 32));
  for (unsigned k = 2; k <= 12; k += 2) {
    const BigRational expected = BigRational(Integer(1) << (k - 1)) - 1;
    CHECK(zeta_interp_exact(k, Branch(2, 0)) == BigRational(expected * bernoulli(k) / k));
  }
}

TEST_CASE("branch gates") {
  CHECK_THROWS_AS(require_even_branch(Branch(5, 1)), BranchError);
  CHECK_NOTHROW(require_even_branch(Branch(5, 2)));
  CHECK_THROWS_AS(zeta_interp(3, Branch(5, 3), 10), BranchError);
  CHECK_THROWS_AS(zeta_interp(4, Branch(5, 2), 10), BranchError);
  CHECK_THROWS_AS(zeta_interp(3, Branch(2, 0), 10), BranchError);
  CHECK_THROWS_AS(zeta_interp(0, Branch(5, 0), 10), DomainError);
  CHECK_THROWS_AS(zeta_measure(-1, Branch(5, 1), 2, 4), BranchError);
}

TEST_CASE("zeta_measure at p = 2") {
  const auto e = zeta_measure(-1, Branch(2, 0), default_regulator(2), 10);
  CHECK(e.path == ZetaPath::measure);
  CHECK(e.regulator == 3);
  CHECK(e.value.valuation() == -2);
  CHECK(gap(e.value, Q(1, 12, 2, 40)) >= e.error_bound_exponent);
  CHECK(e.error_bound_exponent >= 6);
  CHECK_THROWS_AS(zeta_measure(-1, Branch(2, 0), 3, 1), DomainError);
}

TEST_CASE("zeta_measure matches interpolation") {
  const auto interp = zeta_interp(2, Branch(5, 2), 30);
  std::int64_t previous = -1000;
  for (std::int64_t n = 2; n <= 6; ++n) {
    const auto e = zeta_measure(-1, Branch(5, 2), default_regulator(5), n);
    const auto g = gap(e.value, interp);
    CHECK(g >= e.error_bound_exponent);
    CHECK(g >= n - 2);
    CHECK(g >= previous);
    previous = g;
  }
}

TEST_CASE("two routes agree") {
  for (std::int64_t p : {3, 5, 7}) {
    const Branch b(p, 0);
    const std::int64_t k = p - 1;
    const auto a = zeta_measure(1 - k, b, 2, 3);
    const auto c = zeta_measure(Z(1 - k, p, 30), b, 2, 3);
    CHECK(gap(a.value, c.value) >= std::min(a.error_bound_exponent, c.error_bound_exponent));
    const MazurMeasure mu(p, 2, 3, 20);
    CHECK(congruent(zeta_measure(1 - k, b, mu).value, a.value));
  }
  CHECK_THROWS_AS(zeta_measure(-1, Branch(5, 2), MazurMeasure(5, 2, 3, 4)), PrecisionExhausted);
  CHECK_THROWS_AS(zeta_measure(-1, Branch(5, 2), MazurMeasure(5, 2, 3, 20, Regularization::inverse_scaled)),
                  DomainError);
}

TEST_CASE("pole") {
  CHECK_THROWS_AS(zeta_measure(1, Branch(5, 0), 2, 4), PoleError);
  CHECK_THROWS_AS(zeta_measure(Z(1, 5, 20), Branch(5, 0), 2, 4), PoleError);
  CHECK_NOTHROW(zeta_measure(1, Branch(5, 2), 2, 4));
}

TEST_CASE("regulator independence") {
  for (std::int64_t p : {3, 5, 7}) {
    for (std::int64_t k0 = 0; k0 <= p - 2; k0 += 2) {
      const std::int64_t k = k0 == 0 ? p - 1 : k0;
      const auto a = zeta_measure(1 - k, Branch(p, k0), default_regulator(p), 4);
      const auto b = zeta_measure(1 - k, Branch(p, k0), 11, 4);
      CHECK(gap(a.value, b.value) >= std::min(a.error_bound_exponent, b.error_bound_exponent));
    }
  }
}

TEST_CASE("random p-adic arguments") {
  Sampler rng(53);
  const Branch b(5, 2);
  for (int i = 0; i < 5; ++i) {
    const auto s = rng.integer(5, 12);
    const auto lo = zeta_measure(s, b, 2, 3);
    const auto hi = zeta_measure(s, b, 2, 5);
    CHECK(gap(lo.value, hi.value) >= lo.error_bound_exponent);
  }
}

TEST_CASE("interpolation report") {
  const auto e = zeta_interp_eval(2, Branch(2, 0), 32);
  CHECK(e.path == ZetaPath::interpolation);
  CHECK(e.s_integer == -1);
  CHECK(e.level == 0);
  CHECK(e.error_bound_exponent == e.value.absolute_precision());
  CHECK(to_string(ZetaPath::measure) == "measure");
}

TEST_CASE("default regulators") {
  CHECK(default_regulator(2) == 3);
  CHECK(default_regulator(3) == 2);
  CHECK(default_regulator(5) == 2);
  CHECK(default_regulator(7) == 3);
  CHECK(default_regulator(29) == 2);
  // 5 is the smallest primitive root mod 40487 but not mod 40487^2
  CHECK(default_regulator(40487) == 10);
}
