#include <doctest.h>

#include <algorithm>

#include "padic/galois.hpp"
#include "padic/random.hpp"
#include "support.hpp"

using namespace padic;
using test::Z;

TEST_CASE("branch validation") {
  CHECK_NOTHROW(Branch(5, 3));
  CHECK_NOTHROW(Branch(2, 0));
  CHECK_THROWS_AS(Branch(5, 4), BranchError);
  CHECK_THROWS_AS(Branch(5, -1), BranchError);
  CHECK(Branch(7, 4).is_even());
  CHECK_FALSE(Branch(7, 3).is_even());
}

TEST_CASE("fixed generator") {
  const auto g3 = fixed_generator(3, 20);
  CHECK(g3 == -PadicNumber::one(3, 20));
  const auto g5 = fixed_generator(5, 20);
  CHECK(g5.residue(2) == 7);
  for (std::int64_t p : {5, 7, 11, 13}) {
    const auto g = fixed_generator(p, 20);
    CHECK(g.pow(p - 1) == PadicNumber::one(p, 20));
    for (std::int64_t d = 1; d < p - 1; ++d)
      if ((p - 1) % d == 0) CHECK_FALSE(g.pow(d) == PadicNumber::one(p, 20));
  }
  CHECK(fixed_generator(7, 10) == teichmuller(Z(3, 7, 10), 10));
  CHECK_THROWS_AS(fixed_generator(2, 10), DomainError);
}

TEST_CASE("cyclic coordinate") {
  CHECK(t_of(PadicNumber::one(5, 10)) == 0);
  CHECK(t_of(Z(4, 5, 10)) == 2);
  CHECK(t_of(Z(6, 7, 10)) == 3);
  Sampler rng(31);
  for (std::int64_t p : {3, 5, 7, 13}) {
    for (int i = 0; i < 30; ++i) {
      const GaloisElement a(rng.unit(p, 12));
      REQUIRE(teichmuller(a.alpha(), 12) == fixed_generator(p, 12).pow(a.t()));
    }
  }
}

TEST_CASE("rho on the ground state") {
  const auto v = GroundState::canonical(5, 8, 20);
  for (std::int64_t a : {1, 2, 3, 4}) CHECK(rho_apply(Branch(5, 0), GaloisElement(Z(a, 5, 20)), v).scale == v.scale);
  for (std::int64_t k : {0, 1, 2, 3}) CHECK(rho_apply(Branch(5, k), GaloisElement(PadicNumber::one(5, 20)), v).scale == v.scale);
  CHECK(rho_apply(Branch(5, 1), GaloisElement(Z(2, 5, 20)), v).scale.residue(2) == 7);
  CHECK(rho_apply(Branch(5, 1), GaloisElement(Z(2, 5, 20)), v).omega == v.omega);
}

TEST_CASE("representation law and residue dependence") {
  Sampler rng(37);
  for (std::int64_t p : {5, 7, 13}) {
    const auto v = GroundState::canonical(p, 8, 16);
    for (std::int64_t k = 0; k <= p - 2; ++k) {
      const Branch b(p, k);
      for (int i = 0; i < 10; ++i) {
        const auto x = rng.unit(p, 16), y = rng.unit(p, 16);
        const auto lhs = rho_apply(b, GaloisElement(x), rho_apply(b, GaloisElement(y), v));
        REQUIRE(lhs.scale == rho_apply(b, GaloisElement(x * y), v).scale);
        const auto shifted = x + Z(p, p, 16) * rng.integer(p, 16);
        REQUIRE(rho_apply(b, GaloisElement(shifted), v).scale == rho_apply(b, GaloisElement(x), v).scale);
      }
    }
  }
}

TEST_CASE("ground state") {
  const auto v = GroundState::canonical(3, 8, 20);
  const auto low = apply_lowering(v.omega);
  for (std::size_t n = 0; n < 8; ++n) CHECK(low[n].is_zero());
  Sampler rng(41);
  for (int i = 0; i < 50; ++i) CHECK(congruent(mahler_eval(v.omega, rng.integer(3, 12)), PadicNumber::one(3, 12)));
}

TEST_CASE("rho prime") {
  const auto a = as_matrix(Ladder::raising, 7, 6, 12);
  const Branch b(7, 2);
  CHECK(rho_prime_apply(b, 0, a) == a);
  CHECK(congruent(rho_prime_apply(b, 6, a), a));
  Sampler rng(43);
  const auto c = as_matrix(Ladder::hamiltonian, 7, 6, 12);
  for (int i = 0; i < 20; ++i) {
    const auto t1 = static_cast<std::int64_t>(rng.below(30)), t2 = static_cast<std::int64_t>(rng.below(30));
    REQUIRE(congruent(rho_prime_apply(b, t1, rho_prime_apply(b, t2, a)), rho_prime_apply(b, t1 + t2, a)));
    REQUIRE(congruent(rho_prime_apply(b, t1, a + c), rho_prime_apply(b, t1, a) + rho_prime_apply(b, t1, c)));
  }
}

TEST_CASE("orbit periods") {
  const auto a = as_matrix(Ladder::lowering, 5, 6, 12);
  CHECK(orbit(Branch(5, 0), a).period == 1);
  CHECK(orbit(Branch(5, 2), a).period == 2);
  CHECK(orbit(Branch(5, 1), a).period == 4);
  CHECK(orbit(Branch(5, 1), a).orbit.size() == 4);
  const auto b = as_matrix(Ladder::raising, 13, 4, 8);
  for (std::int64_t k = 0; k <= 11; ++k) CHECK(orbit(Branch(13, k), b).period == 12 / gcd(k, 12));
  CHECK_THROWS_AS(orbit(Branch(5, 1), OperatorMatrix(5, 3)), DomainError);
}

TEST_CASE("injective on the cyclic group when gcd(kappa0, p - 1) = 1") {
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    const auto g = fixed_generator(p, 8);
    for (std::int64_t k = 1; k <= p - 2; ++k) {
      if (gcd(k, p - 1) != 1) continue;
      std::vector<Integer> seen;
      for (std::int64_t t = 0; t < p - 1; ++t) seen.push_back(g.pow(k * t).unit());
      std::sort(seen.begin(), seen.end());
      CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    }
  }
}
