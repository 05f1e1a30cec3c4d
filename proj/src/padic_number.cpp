#include "padic/padic_number.hpp"

#include <algorithm>
#include <sstream>

namespace padic {

namespace {

void check_prime(std::int64_t p) {
  if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
}

void check_same_prime(const PadicNumber& a, const PadicNumber& b) {
  if (a.prime() != b.prime()) throw PrimeMismatch(a.prime(), b.prime());
}

std::int64_t sat_add(std::int64_t x, std::int64_t y) {
  if (x >= kExact || y >= kExact) return kExact;
  return x + y;
}

Integer mod_pow(const Integer& base, const Integer& exp, const Integer& mod) {
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

Integer mod_inverse(const Integer& a, const Integer& mod) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw DomainError("not invertible");
  return r;
}

Integer reduce(const Integer& a, const Integer& mod) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t());
  return r;
}

}  // namespace

PadicNumber PadicNumber::zero(std::int64_t p, std::int64_t known_to) {
  check_prime(p);
  return PadicNumber(p, std::min(known_to, kExact), Integer(0), 0);
}

PadicNumber PadicNumber::one(std::int64_t p, std::int64_t precision) {
  check_prime(p);
  if (precision < 1) throw DomainError("precision must be positive");
  return PadicNumber(p, 0, Integer(1), precision);
}

PadicNumber PadicNumber::from_integer(const Integer& n, std::int64_t p, std::int64_t precision) {
  check_prime(p);
  if (precision < 1) throw DomainError("precision must be positive");
  if (n == 0) return PadicNumber(p, precision, Integer(0), 0);
  return from_parts(p, 0, n, sat_add(padic::valuation(n, p), precision));
}

PadicNumber PadicNumber::from_rational(const Integer& num, const Integer& den, std::int64_t p,
                                       std::int64_t precision) {
  check_prime(p);
  if (den == 0) throw DivisionByZero();
  if (precision < 1) throw DomainError("precision must be positive");
  if (num == 0) return PadicNumber(p, precision, Integer(0), 0);
  Integer a = num, b = den;
  const std::int64_t va = padic::valuation(a, p), vb = padic::valuation(b, p);
  mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), power_of(p, va).get_mpz_t());
  mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), power_of(p, vb).get_mpz_t());
  const Integer mod = power_of(p, precision);
  Integer u = reduce(a * mod_inverse(reduce(b, mod), mod), mod);
  return PadicNumber(p, va - vb, std::move(u), precision);
}

PadicNumber PadicNumber::from_rational(const BigRational& q, std::int64_t p, std::int64_t precision) {
  return from_rational(q.get_num(), q.get_den(), p, precision);
}

PadicNumber PadicNumber::from_parts(std::int64_t p, std::int64_t valuation, Integer unit,
                                    std::int64_t precision) {
  check_prime(p);
  return make(p, valuation, std::move(unit), precision);
}

PadicNumber PadicNumber::from_digits(std::int64_t p, std::int64_t valuation,
                                     std::span<const std::int64_t> digits) {
  check_prime(p);
  if (digits.empty()) throw DomainError("empty digit list");
  Integer u = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it < 0 || *it >= p) throw DomainError("digit out of range");
    u = u * p + *it;
  }
  return make(p, valuation, std::move(u), static_cast<std::int64_t>(digits.size()));
}

PadicNumber PadicNumber::make(std::int64_t p, std::int64_t v, Integer u, std::int64_t n) {
  if (n <= 0) return PadicNumber(p, v + n, Integer(0), 0);
  const Integer mod = power_of(p, n);
  u = reduce(u, mod);
  if (u == 0) return PadicNumber(p, v + n, Integer(0), 0);
  std::int64_t w = 0;
  while (mpz_divisible_ui_p(u.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(u.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(p));
    ++w;
  }
  // u < p^(n-w) already
  return PadicNumber(p, v + w, std::move(u), n - w);
}

std::vector<std::int64_t> PadicNumber::unit_digits() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(prec_));
  Integer u = unit_;
  for (std::int64_t i = 0; i < prec_; ++i) {
    out.push_back(static_cast<std::int64_t>(mpz_fdiv_q_ui(u.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(p_))));
  }
  return out;
}

Integer PadicNumber::residue(std::int64_t digits) const {
  if (digits < 0) throw DomainError("negative digit count");
  if (is_zero()) {
    if (val_ < digits) throw PrecisionExhausted("residue needs " + std::to_string(digits) + " digits of 0 + O(p^" + std::to_string(val_) + ")");
    return 0;
  }
  if (val_ < 0) throw DomainError("residue of a non-integral value");
  if (absolute_precision() < digits)
    throw PrecisionExhausted("residue needs " + std::to_string(digits) + " digits, value has " +
                             std::to_string(absolute_precision()));
  if (val_ >= digits) return 0;
  return reduce(unit_ * power_of(p_, val_), power_of(p_, digits));
}

PadicNumber PadicNumber::with_absolute_precision(std::int64_t cap) const {
  if (is_zero()) return PadicNumber(p_, std::min(val_, cap), Integer(0), 0);
  if (cap >= absolute_precision()) return *this;
  return make(p_, val_, unit_, cap - val_);
}

PadicNumber PadicNumber::with_precision(std::int64_t relative) const {
  if (is_zero() || relative >= prec_) return *this;
  return make(p_, val_, unit_, relative);
}

PadicNumber PadicNumber::operator-() const {
  if (is_zero()) return *this;
  return PadicNumber(p_, val_, power_of(p_, prec_) - unit_, prec_);
}

PadicNumber PadicNumber::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) return one(p_, std::max<std::int64_t>(prec_, 1));
  if (is_zero()) {
    if (val_ >= kExact) return *this;
    return PadicNumber(p_, val_ >= kExact / e ? kExact : val_ * e, Integer(0), 0);
  }
  const Integer mod = power_of(p_, prec_);
  return PadicNumber(p_, val_ * e, mod_pow(unit_, Integer(static_cast<long>(e)), mod), prec_);
}

PadicNumber PadicNumber::inverse() const { return one(p_, std::max<std::int64_t>(prec_, 1)) / *this; }

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
  check_same_prime(a, b);
  const std::int64_t p = a.p_;
  const std::int64_t abs_prec = std::min(a.absolute_precision(), b.absolute_precision());
  if (a.is_zero()) return b.with_absolute_precision(abs_prec);
  if (b.is_zero()) return a.with_absolute_precision(abs_prec);
  const std::int64_t v = std::min(a.val_, b.val_);
  if (abs_prec <= v) return PadicNumber(p, abs_prec, Integer(0), 0);
  const std::int64_t n = abs_prec - v;
  Integer x = 0;
  if (a.val_ - v < n) x += a.val_ == v ? a.unit_ : a.unit_ * power_of(p, a.val_ - v);
  if (b.val_ - v < n) x += b.val_ == v ? b.unit_ : b.unit_ * power_of(p, b.val_ - v);
  return PadicNumber::make(p, v, std::move(x), n);
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
  check_same_prime(a, b);
  const std::int64_t p = a.p_;
  if (a.is_zero() && b.is_zero()) return PadicNumber(p, sat_add(a.val_, b.val_), Integer(0), 0);
  if (a.is_zero()) return PadicNumber(p, sat_add(a.val_, b.val_), Integer(0), 0);
  if (b.is_zero()) return PadicNumber(p, sat_add(b.val_, a.val_), Integer(0), 0);
  const std::int64_t n = std::min(a.prec_, b.prec_);
  const Integer mod = power_of(p, n);
  return PadicNumber(p, a.val_ + b.val_, reduce(a.unit_ * b.unit_, mod), n);
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
  check_same_prime(a, b);
  const std::int64_t p = a.p_;
  if (b.is_zero()) {
    if (b.is_exact_zero()) throw DivisionByZero();
    throw PrecisionExhausted("division by 0 + O(" + std::to_string(p) + "^" + std::to_string(b.val_) + ")");
  }
  if (a.is_zero()) return PadicNumber(p, a.val_ >= kExact ? kExact : a.val_ - b.val_, Integer(0), 0);
  const std::int64_t n = std::min(a.prec_, b.prec_);
  const Integer mod = power_of(p, n);
  return PadicNumber(p, a.val_ - b.val_, reduce(a.unit_ * mod_inverse(b.unit_, mod), mod), n);
}

std::string PadicNumber::to_string() const {
  std::ostringstream os;
  if (is_zero()) {
    os << '0';
    if (!is_exact_zero()) os << " + O(" << p_ << '^' << val_ << ')';
    return os.str();
  }
  const auto digits = unit_digits();
  os << "…";
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (it != digits.rbegin()) os << ' ';
    os << *it;
  }
  os << " · " << p_ << '^' << val_ << " + O(" << p_ << '^' << (val_ + prec_) << ')';
  return os.str();
}

PadicNumber arith(const PadicNumber& a, const PadicNumber& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw DomainError("unknown arithmetic op");
}

bool congruent(const PadicNumber& a, const PadicNumber& b) { return (a - b).is_zero(); }

PadicNumber binomial(const PadicNumber& x, std::uint64_t n) {
  const std::int64_t p = x.prime();
  if (!x.is_integral()) throw DomainError("binomial polynomial needs x in Z_p");
  if (x.is_exact_zero()) throw DomainError("evaluation point must carry a finite precision");
  const std::int64_t a = x.absolute_precision();
  if (n == 0) return PadicNumber::one(p, std::max<std::int64_t>(a, 1));
  const std::int64_t out_digits = a - floor_log(n, p);
  if (out_digits <= 0) return PadicNumber::zero(p, 0);

  const std::int64_t vf = factorial_valuation(n, p);
  const Integer work_mod = power_of(p, a + vf);
  const Integer mod = power_of(p, a);
  const Integer xr = x.residue(a);
  Integer prod = 1;
  Integer unit_factorial = 1;
  for (std::uint64_t j = 0; j < n; ++j) {
    prod = reduce(prod * (xr - Integer(static_cast<unsigned long>(j))), work_mod);
    Integer m = static_cast<unsigned long>(j + 1);
    while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p)))
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
    unit_factorial = reduce(unit_factorial * m, mod);
  }
  mpz_divexact(prod.get_mpz_t(), prod.get_mpz_t(), power_of(p, vf).get_mpz_t());
  prod = reduce(prod * mod_inverse(unit_factorial, mod), mod);
  return PadicNumber::from_parts(p, 0, std::move(prod), out_digits);
}

std::int64_t principal_modulus(std::int64_t p) { return p == 2 ? 4 : p; }

PadicNumber teichmuller(const PadicNumber& alpha, std::int64_t precision) {
  const std::int64_t p = alpha.prime();
  if (precision < 1) throw DomainError("precision must be positive");
  if (alpha.is_zero()) {
    if (alpha.is_exact_zero()) throw DomainError("teichmuller of zero");
    throw PrecisionExhausted("teichmuller of 0 + O(p^" + std::to_string(alpha.valuation()) + ")");
  }
  if (alpha.valuation() != 0) throw DomainError("teichmuller needs a unit of Z_p");
  if (p == 2) {
    const Integer r = alpha.residue(2);
    const PadicNumber one = PadicNumber::one(2, precision);
    return r == 1 ? one : -one;
  }
  const Integer mod = power_of(p, precision);
  const std::int64_t start_digits = std::min(precision, alpha.precision());
  Integer x = alpha.residue(start_digits);
  const Integer exp = p;
  for (std::int64_t k = 0; k < precision; ++k) x = mod_pow(x, exp, mod);
  return PadicNumber::from_parts(p, 0, std::move(x), precision);
}

PadicNumber teichmuller(const PadicNumber& alpha) {
  return teichmuller(alpha, std::max<std::int64_t>(alpha.precision(), 1));
}

PadicNumber angle(const PadicNumber& x) {
  const PadicNumber w = teichmuller(x);
  return x / w;
}

namespace {

// Valuation of u - 1, or the known-to exponent when u = 1 at its precision.
std::int64_t check_principal(const PadicNumber& u) {
  if (!u.is_unit()) throw DomainError("unit_power needs a unit");
  const std::int64_t p = u.prime();
  const PadicNumber d = u - PadicNumber::one(p, u.precision());
  const std::int64_t needed = p == 2 ? 2 : 1;
  if (!d.is_zero() && d.valuation() < needed)
    throw DomainError("unit_power needs u = 1 mod " + std::to_string(principal_modulus(p)));
  return d.valuation();
}

}  // namespace

PadicNumber unit_power(const PadicNumber& u, const PadicNumber& s) {
  check_same_prime(u, s);
  check_principal(u);
  if (!s.is_integral()) throw DomainError("unit_power exponent must lie in Z_p");
  const std::int64_t p = u.prime();
  const std::int64_t target = u.precision();
  const PadicNumber d = u - PadicNumber::one(p, target);
  if (d.is_zero() || s.is_exact_zero()) return PadicNumber::one(p, target);
  const std::int64_t e = d.valuation();

  PadicNumber sum = PadicNumber::one(p, target);
  PadicNumber d_pow = d;
  for (std::uint64_t n = 1;; ++n) {
    if (static_cast<std::int64_t>(n) * e >= target + factorial_valuation(n, p)) break;
    sum += binomial(s, n) * d_pow;
    d_pow *= d;
  }
  return sum.with_absolute_precision(target);
}

PadicNumber unit_power(const PadicNumber& u, std::int64_t s) {
  check_principal(u);
  return u.pow(s);
}

}  // namespace padic
