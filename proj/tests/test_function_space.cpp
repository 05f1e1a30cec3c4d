#include <doctest.h>

#include "padic/kernels.hpp"
#include "padic/random.hpp"
#include "support.hpp"

using namespace padic;
using test::Z;

namespace {

MahlerSeries mahler(std::int64_t p, std::vector<long> c, std::int64_t precision = 10) {
  std::vector<PadicNumber> v;
  for (long x : c) v.push_back(x == 0 ? PadicNumber::zero(p) : Z(x, p, precision));
  return MahlerSeries(p, std::move(v));
}

std::vector<PadicNumber> samples(std::int64_t p, std::size_t n, long (*f)(long), std::int64_t precision = 10) {
  std::vector<PadicNumber> out;
  for (std::size_t k = 0; k < n; ++k) {
    const long y = f(static_cast<long>(k));
    out.push_back(y == 0 ? PadicNumber::zero(p, precision) : Z(y, p, precision));
  }
  return out;
}

bool coefficients_equal(const MahlerSeries& f, std::vector<long> expected) {
  for (std::size_t n = 0; n < f.truncation(); ++n) {
    const long e = n < expected.size() ? expected[n] : 0;
    if (e == 0 ? !f[n].is_zero() : !congruent(f[n], Z(e, f.prime(), 10))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("mahler basis evaluation") {
  Sampler rng(1);
  for (int i = 0; i < 10; ++i) CHECK(mahler_basis_eval(0, rng.integer(7, 8)) == PadicNumber::one(7, 8));
  CHECK(congruent(mahler_basis_eval(2, Z(3, 5, 8)), Z(3, 5, 8)));
  for (int i = 0; i < 50; ++i) CHECK(mahler_basis_eval(6, rng.integer(5, 8)).is_integral());
}

TEST_CASE("P_n integrality up to n = 64") {
  Sampler rng(2);
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (int i = 0; i < 20; ++i) {
      const auto x = rng.integer(p, 16);
      for (std::uint64_t n = 0; n <= 64; ++n) REQUIRE(mahler_basis_eval(n, x).is_integral());
    }
  }
}

TEST_CASE("mahler_eval examples") {
  CHECK(congruent(mahler_eval(mahler(5, {0, 0, 1}), Z(3, 5, 8)), Z(3, 5, 8)));
  CHECK(mahler_eval(mahler(5, {1}), Z(17, 5, 8)) == PadicNumber::one(5, 10).with_absolute_precision(8));
  CHECK(congruent(mahler_eval(mahler(5, {0, 1, 2}), Z(4, 5, 8)), Z(16, 5, 8)));
  CHECK_THROWS_AS(mahler_eval(mahler(5, {1}), test::Q(1, 5, 5, 4)), DomainError);
}

TEST_CASE("mahler_expand examples") {
  CHECK(coefficients_equal(mahler_expand(samples(5, 16, [](long k) { return k; }), 8), {0, 1}));
  CHECK(coefficients_equal(mahler_expand(samples(5, 16, [](long k) { return k * k; }), 8), {0, 1, 2}));
  CHECK(coefficients_equal(mahler_expand(samples(5, 16, [](long k) { return k * (k - 1) / 2; }), 8), {0, 0, 1}));
  CHECK_THROWS_AS(mahler_expand(samples(5, 4, [](long k) { return k; }), 8), DomainError);
  // polynomial input: the extra window is all zero
  CHECK(mahler_expand(samples(5, 16, [](long k) { return k * k; }), 8).tail_bound().is_zero());
}

TEST_CASE("mahler_expand coefficients equal the binomial sum formula") {
  Sampler rng(4);
  const std::int64_t p = 3;
  std::vector<PadicNumber> s;
  for (int k = 0; k < 12; ++k) s.push_back(rng.integer(p, 10));
  const auto f = mahler_expand(s, 12);
  for (std::size_t n = 0; n < 12; ++n) {
    PadicNumber sum = PadicNumber::zero(p);
    for (std::size_t k = 0; k <= n; ++k) {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), n, k);
      if ((n - k) % 2) b = -b;
      sum += PadicNumber::from_integer(b, p, 30) * s[k];
    }
    REQUIRE(congruent(sum, f[n]));
  }
}

TEST_CASE("vdp basis") {
  Sampler rng(5);
  for (int i = 0; i < 10; ++i) CHECK(vdp_basis_eval(0, rng.integer(3, 6)));
  CHECK(vdp_basis_eval(2, Z(6, 2, 8)));
  CHECK_FALSE(vdp_basis_eval(2, Z(4, 2, 8)));
  for (std::uint64_t n = 1; n < 100; ++n) CHECK(vdp_basis_eval(n, Z(static_cast<long>(n), 3, 10)));
  CHECK_THROWS_AS(vdp_basis_eval(9, Z(1, 3, 2)), PrecisionExhausted);
}

TEST_CASE("vdp discs at one level are disjoint") {
  Sampler rng(6);
  for (std::int64_t p : {2, 3, 5}) {
    for (int i = 0; i < 200; ++i) {
      const auto x = rng.integer(p, 8);
      for (std::uint64_t lo = 1; lo < 200; lo *= static_cast<std::uint64_t>(p)) {
        int hits = 0;
        for (std::uint64_t n = lo; n < lo * static_cast<std::uint64_t>(p); ++n) hits += vdp_basis_eval(n, x) ? 1 : 0;
        REQUIRE(hits <= 1);
      }
    }
  }
}

TEST_CASE("vdp_expand examples") {
  const auto one = vdp_expand(samples(2, 16, [](long) { return 1L; }));
  CHECK(one[0] == Z(1, 2, 10));
  for (std::size_t n = 1; n < 16; ++n) CHECK(one[n].is_zero());
  const auto id = vdp_expand(samples(2, 16, [](long k) { return k; }));
  CHECK(congruent(id[3], Z(2, 2, 10)));
  CHECK(congruent(id[12], Z(8, 2, 10)));
}

TEST_CASE("vdp reconstruction at sampled integers") {
  Sampler rng(7);
  for (std::int64_t p : {2, 3, 5}) {
    std::vector<PadicNumber> s;
    for (int k = 0; k < 40; ++k) s.push_back(rng.integer(p, 8));
    const auto g = vdp_expand(s);
    for (std::uint64_t n = 0; n < 40; ++n) {
      REQUIRE(sample_at(g, n) == s[n]);
      REQUIRE(congruent(vdp_eval(g, Z(static_cast<long>(n), p, 10)), s[n]));
    }
  }
}

TEST_CASE("basis conversion examples") {
  const auto c1 = to_van_der_put(mahler(5, {1, 0, 0, 0}));
  CHECK(congruent(c1[0], Z(1, 5, 10)));
  for (std::size_t n = 1; n < 4; ++n) CHECK(c1[n].is_zero());

  const auto back = to_mahler(to_van_der_put(mahler(5, {0, 1, 0, 0, 0, 0})), 6);
  CHECK(coefficients_equal(back, {0, 1}));

  std::vector<PadicNumber> e1(8, PadicNumber::zero(2));
  e1[1] = PadicNumber::one(2, 10);
  const auto as_mahler = to_mahler(VanDerPutSeries(2, e1), 8);
  CHECK(congruent(sample_at(as_mahler, 3), PadicNumber::one(2, 10)));
}

TEST_CASE("mahler uniqueness and round trip on random polynomials") {
  Sampler rng(8);
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (int i = 0; i < 10; ++i) {
      const auto f = rng.polynomial(p, 24, 10, 12);
      std::vector<PadicNumber> s;
      for (std::uint64_t k = 0; k < 48; ++k) s.push_back(sample_at(f, k));
      const auto again = mahler_expand(s, 24);
      CHECK(again.tail_bound().is_zero());
      for (std::size_t n = 0; n < 24; ++n) REQUIRE(congruent(again[n], f[n]));
      const auto g = to_van_der_put(f);
      const auto h = to_mahler(g, 24);
      for (std::size_t n = 0; n < 24; ++n) REQUIRE(congruent(h[n], f[n]));
      // stored vdP coefficients already attain the norm of a degree < 24 polynomial
      CHECK(sup_norm(f) == sup_norm(VanDerPutSeries(p, g.coefficients())));
      CHECK(g.tail_bound() <= sup_norm(f));
    }
  }
}

TEST_CASE("conversion tail bounds hold beyond the window") {
  Sampler rng(9);
  const std::int64_t p = 3;
  const auto f = rng.polynomial(p, 27, 27, 10);  // full degree 26 polynomial
  const MahlerSeries head(p, std::vector<PadicNumber>(f.coefficients().begin(), f.coefficients().begin() + 9));
  const auto g = to_van_der_put(head);
  // true v_n of the degree-8 interpolant for 9 <= n < 81 against the bound
  for (std::uint64_t n = 9; n < 81; ++n) {
    const auto v = sample_at(head, n) - sample_at(head, n_minus(n, p));
    REQUIRE(v.abs() <= g.tail_bound());
  }
}

TEST_CASE("sup norm") {
  CHECK(sup_norm(mahler(5, {1})) == AbsValue::power(5, 0));
  CHECK(sup_norm(mahler(5, {0, 5, 25})) == AbsValue::power(5, 1));
  CHECK(sup_norm(MahlerSeries::zero(5, 4)).is_zero());
  const MahlerSeries with_tail(5, {Z(25, 5, 4)}, AbsValue::power(5, 1));
  CHECK(sup_norm(with_tail) == AbsValue::power(5, 1));
}

TEST_CASE("series arithmetic") {
  const auto f = mahler(5, {1, 2, 3}), g = mahler(5, {4, 0, 1});
  const auto h = f + g;
  CHECK(congruent(h[0], Z(5, 5, 10)));
  CHECK(congruent((f - f)[1], PadicNumber::zero(5)));
  CHECK((f - f)[1].is_zero());
  const auto scaled = Z(5, 5, 10) * MahlerSeries(5, f.coefficients(), AbsValue::power(5, 2));
  CHECK(scaled.tail_bound() == AbsValue::power(5, 3));
  CHECK_THROWS_AS(f + mahler(3, {1, 2, 3}), PrimeMismatch);
  CHECK_THROWS_AS(f + mahler(5, {1, 2}), DomainError);
}

TEST_CASE("evaluate_many matches the serial reference bit for bit") {
  Sampler rng(10);
  const auto f = rng.mahler_series(7, 20, 12);
  std::vector<PadicNumber> points;
  for (int i = 0; i < 64; ++i) points.push_back(rng.integer(7, 12));
  const auto a = evaluate_many(f, points), b = evaluate_many_serial(f, points);
  CHECK(a == b);
  for (std::size_t i = 0; i < points.size(); ++i) CHECK(a[i] == mahler_eval(f, points[i]));
}
