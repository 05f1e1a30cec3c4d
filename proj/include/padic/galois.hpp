#pragma once

#include <cstdint>
#include <vector>

#include "padic/ccr.hpp"

namespace padic {

// Branch index kappa0 in [0, p-2] selecting the character omega^kappa0.
class Branch {
 public:
  Branch(std::int64_t p, std::int64_t kappa0);

  std::int64_t prime() const { return p_; }
  std::int64_t kappa0() const { return kappa0_; }
  // omega^kappa0(-1) = 1.
  bool is_even() const { return kappa0_ % 2 == 0; }

  friend bool operator==(const Branch&, const Branch&) = default;

 private:
  std::int64_t p_;
  std::int64_t kappa0_;
};

// The distinguished (p-1)th root of unity zeta_(p-1) = omega(g), g the smallest
// primitive root mod p. Requires p >= 3.
PadicNumber fixed_generator(std::int64_t p, std::int64_t precision);

// Cyclic coordinate t(alpha) in [0, p-2]: omega(alpha) = fixed_generator(p)^t.
// Only alpha mod p matters.
std::int64_t t_of(const PadicNumber& alpha);

// An element of Z_p^* = Gal(Q_p/Q) with its cyclic coordinate.
class GaloisElement {
 public:
  explicit GaloisElement(PadicNumber alpha);

  std::int64_t prime() const { return alpha_.prime(); }
  const PadicNumber& alpha() const { return alpha_; }
  std::int64_t t() const { return t_; }

 private:
  PadicNumber alpha_;
  std::int64_t t_;
};

// c * Omega in the line V_0, with Omega = P_0 the constant function 1.
struct GroundState {
  MahlerSeries omega;
  PadicNumber scale;

  static GroundState canonical(std::int64_t p, std::size_t truncation, std::int64_t precision);
  std::int64_t prime() const { return omega.prime(); }
};

// rho_kappa0(alpha): scale *= omega(alpha)^kappa0. Omega itself is unchanged.
GroundState rho_apply(const Branch& branch, const GaloisElement& alpha, const GroundState& v);

// rho'_kappa0(t): A -> zeta_(p-1)^(kappa0 t) A. Homomorphic in t mod p-1.
OperatorMatrix rho_prime_apply(const Branch& branch, std::int64_t t, const OperatorMatrix& a);

struct OrbitReport {
  std::int64_t p;
  std::int64_t kappa0;
  std::int64_t period;
  std::vector<OperatorMatrix> orbit;  // rho'(t)(A) for t = 0..p-2

  friend bool operator==(const OrbitReport&, const OrbitReport&) = default;
};

// Orbit of A under t -> rho'(t) and its least period, found by comparing
// matrices (it equals (p-1)/gcd(kappa0, p-1)). A must be nonzero.
OrbitReport orbit(const Branch& branch, const OperatorMatrix& a);

}  // namespace padic
