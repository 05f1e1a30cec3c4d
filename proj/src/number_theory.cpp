#include "padic/number_theory.hpp"

#include <cmath>
#include <unordered_map>

#include "padic/errors.hpp"

namespace padic {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Integer power_of(std::int64_t p, std::int64_t e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

std::int64_t valuation(const Integer& n, std::int64_t p) {
  if (n == 0) throw DomainError("valuation of zero");
  Integer m = n;
  std::int64_t v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
    ++v;
  }
  return v;
}

std::int64_t factorial_valuation(std::uint64_t n, std::int64_t p) {
  std::uint64_t sum = 0;
  for (std::uint64_t m = n; m > 0; m /= static_cast<std::uint64_t>(p)) sum += m % static_cast<std::uint64_t>(p);
  return static_cast<std::int64_t>((n - sum) / static_cast<std::uint64_t>(p - 1));
}

std::int64_t floor_log(std::uint64_t n, std::int64_t p) {
  if (n == 0) throw DomainError("floor_log of zero");
  std::int64_t s = 0;
  for (n /= static_cast<std::uint64_t>(p); n > 0; n /= static_cast<std::uint64_t>(p)) ++s;
  return s;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  using u128 = unsigned __int128;
  std::int64_t b = ((base % mod) + mod) % mod;
  std::int64_t r = 1 % mod;
  while (exp > 0) {
    if (exp & 1) r = static_cast<std::int64_t>(static_cast<u128>(r) * static_cast<u128>(b) % static_cast<u128>(mod));
    b = static_cast<std::int64_t>(static_cast<u128>(b) * static_cast<u128>(b) % static_cast<u128>(mod));
    exp >>= 1;
  }
  return r;
}

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool generates(std::int64_t g, std::int64_t order, std::int64_t mod, const std::vector<std::int64_t>& factors) {
  if (gcd(g, mod) != 1) return false;
  for (std::int64_t q : factors)
    if (pow_mod(g, order / q, mod) == 1) return false;
  return true;
}

}  // namespace

std::int64_t smallest_primitive_root(std::int64_t p) {
  if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
  if (p == 2) return 1;
  const auto factors = prime_factors(p - 1);
  for (std::int64_t g = 2; g < p; ++g)
    if (generates(g, p - 1, p, factors)) return g;
  throw DomainError("no primitive root");  // unreachable for prime p
}

std::int64_t smallest_primitive_root_mod_square(std::int64_t p) {
  if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
  if (p == 2) return 3;
  const std::int64_t mod = p * p;
  const std::int64_t order = p * (p - 1);
  const auto factors = prime_factors(order);
  for (std::int64_t g = 2; g < mod; ++g)
    if (generates(g, order, mod, factors)) return g;
  throw DomainError("no primitive root mod p^2");
}

std::int64_t discrete_log(std::int64_t a, std::int64_t g, std::int64_t p) {
  const std::int64_t n = p - 1;
  a = ((a % p) + p) % p;
  if (a == 0) throw DomainError("discrete log of a non-unit");
  const auto m = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::unordered_map<std::int64_t, std::int64_t> baby;
  baby.reserve(static_cast<std::size_t>(m));
  std::int64_t cur = 1;
  for (std::int64_t j = 0; j < m; ++j) {
    baby.emplace(cur, j);
    cur = static_cast<std::int64_t>(static_cast<unsigned __int128>(cur) * static_cast<std::uint64_t>(g) % static_cast<std::uint64_t>(p));
  }
  // giant step multiplies by g^(-m)
  const std::int64_t giant = pow_mod(g, n - (m % n), p);
  std::int64_t gamma = a;
  for (std::int64_t i = 0; i <= m; ++i) {
    if (auto it = baby.find(gamma); it != baby.end()) return (i * m + it->second) % n;
    gamma = static_cast<std::int64_t>(static_cast<unsigned __int128>(gamma) * static_cast<std::uint64_t>(giant) % static_cast<std::uint64_t>(p));
  }
  throw DomainError("discrete log: base is not a generator");
}

HenselDigits hensel_digits(std::uint64_t n, std::int64_t p) {
  HenselDigits h{p, {}};
  const auto up = static_cast<std::uint64_t>(p);
  for (; n > 0; n /= up) h.digits.push_back(static_cast<std::int64_t>(n % up));
  return h;
}

std::uint64_t n_minus(std::uint64_t n, std::int64_t p) {
  if (n == 0) throw DomainError("n_minus(0) is undefined");
  const auto up = static_cast<std::uint64_t>(p);
  std::uint64_t top = 1;
  while (n / top >= up) top *= up;
  return n % top;
}

}  // namespace padic
