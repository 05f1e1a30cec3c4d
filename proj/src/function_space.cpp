#include "padic/function_space.hpp"

#include <algorithm>

namespace padic {

namespace {

// Delta^n f(0) for n < samples.size(), by repeated differencing in place.
std::vector<PadicNumber> forward_differences(std::span<const PadicNumber> samples) {
  std::vector<PadicNumber> row(samples.begin(), samples.end());
  std::vector<PadicNumber> out;
  out.reserve(row.size());
  while (!row.empty()) {
    out.push_back(row.front());
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.pop_back();
  }
  return out;
}

AbsValue max_abs(std::int64_t p, std::span<const PadicNumber> values) {
  AbsValue m = AbsValue::zero(p);
  for (const auto& v : values) m = max(m, v.abs());
  return m;
}

PadicNumber cap_by_tail(const PadicNumber& value, AbsValue tail) {
  return tail.is_zero() ? value : value.with_absolute_precision(tail.exponent());
}

// Bound on sup_{n >= M} |h(n) - h(n_-)| for h = sum_{j<M} c_j P_j.
AbsValue interpolant_increment_bound(std::int64_t p, std::span<const PadicNumber> coeffs,
                                     std::size_t truncation) {
  AbsValue bound = AbsValue::zero(p);
  const std::int64_t level = floor_log(truncation, p);
  for (std::size_t j = 1; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    const std::int64_t e = coeffs[j].valuation() - floor_log(j, p) + level;
    bound = max(bound, AbsValue::power(p, std::max(e, coeffs[j].valuation())));
  }
  return bound;
}

void require_integral_point(const PadicNumber& x) {
  if (!x.is_integral()) throw DomainError("evaluation point must lie in Z_p");
}

}  // namespace

PadicNumber mahler_basis_eval(std::uint64_t n, const PadicNumber& x) { return binomial(x, n); }

PadicNumber mahler_eval(const MahlerSeries& f, const PadicNumber& x) {
  if (x.prime() != f.prime()) throw PrimeMismatch(f.prime(), x.prime());
  require_integral_point(x);
  PadicNumber sum = PadicNumber::zero(f.prime());
  for (std::size_t n = 0; n < f.truncation(); ++n) {
    if (f[n].is_exact_zero()) continue;
    sum += f[n] * binomial(x, n);
  }
  return cap_by_tail(sum, f.tail_bound());
}

MahlerSeries mahler_expand(std::span<const PadicNumber> samples, std::size_t truncation) {
  if (truncation == 0) throw DomainError("truncation must be positive");
  if (samples.size() < truncation)
    throw DomainError("insufficient samples: need " + std::to_string(truncation) + ", got " +
                      std::to_string(samples.size()));
  const std::int64_t p = samples.front().prime();
  auto diffs = forward_differences(samples);
  const AbsValue tail = samples.size() > truncation
                            ? max_abs(p, std::span(diffs).subspan(truncation))
                            : diffs[truncation - 1].abs();
  diffs.erase(diffs.begin() + static_cast<std::ptrdiff_t>(truncation), diffs.end());
  return MahlerSeries(p, std::move(diffs), tail);
}

MahlerSeries mahler_expand(const std::function<PadicNumber(std::uint64_t)>& oracle,
                           std::size_t truncation, std::size_t window) {
  if (window == 0) window = 2 * truncation;
  std::vector<PadicNumber> samples;
  samples.reserve(window);
  for (std::uint64_t k = 0; k < window; ++k) samples.push_back(oracle(k));
  return mahler_expand(samples, truncation);
}

bool vdp_basis_eval(std::uint64_t n, const PadicNumber& x) {
  require_integral_point(x);
  if (n == 0) return true;
  const std::int64_t digits = floor_log(n, x.prime()) + 1;
  return x.residue(digits) == Integer(static_cast<unsigned long>(n));
}

VanDerPutSeries vdp_expand(std::span<const PadicNumber> samples, std::size_t truncation) {
  if (truncation == 0) throw DomainError("truncation must be positive");
  if (samples.size() < truncation)
    throw DomainError("insufficient samples: need " + std::to_string(truncation) + ", got " +
                      std::to_string(samples.size()));
  const std::int64_t p = samples.front().prime();
  std::vector<PadicNumber> v;
  v.reserve(samples.size());
  v.push_back(samples[0]);
  for (std::uint64_t n = 1; n < samples.size(); ++n) v.push_back(samples[n] - samples[n_minus(n, p)]);

  AbsValue tail = AbsValue::zero(p);
  if (samples.size() > truncation) {
    tail = max_abs(p, std::span(v).subspan(truncation));
  } else if (truncation == 1) {
    tail = v[0].abs();
  } else {
    const auto top = static_cast<std::size_t>(power_of(p, floor_log(truncation - 1, p)).get_ui());
    tail = max_abs(p, std::span(v).subspan(top, truncation - top));
  }
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(truncation), v.end());
  return VanDerPutSeries(p, std::move(v), tail);
}

VanDerPutSeries vdp_expand(std::span<const PadicNumber> samples) {
  return vdp_expand(samples, samples.size());
}

VanDerPutSeries vdp_expand(const std::function<PadicNumber(std::uint64_t)>& oracle,
                           std::size_t truncation) {
  std::vector<PadicNumber> samples;
  samples.reserve(truncation);
  for (std::uint64_t k = 0; k < truncation; ++k) samples.push_back(oracle(k));
  return vdp_expand(samples, truncation);
}

PadicNumber vdp_eval(const VanDerPutSeries& g, const PadicNumber& x) {
  if (x.prime() != g.prime()) throw PrimeMismatch(g.prime(), x.prime());
  require_integral_point(x);
  PadicNumber sum = PadicNumber::zero(g.prime());
  for (std::size_t n = 0; n < g.truncation(); ++n) {
    if (g[n].is_zero()) {
      sum += g[n];
    } else if (vdp_basis_eval(n, x)) {
      sum += g[n];
    }
  }
  return cap_by_tail(sum, g.tail_bound());
}

PadicNumber sample_at(const MahlerSeries& f, std::uint64_t n) {
  const std::int64_t p = f.prime();
  PadicNumber sum = PadicNumber::zero(p);
  const std::uint64_t top = std::min<std::uint64_t>(n, f.truncation() - 1);
  Integer b;
  for (std::uint64_t j = 0; j <= top; ++j) {
    const PadicNumber& c = f[j];
    if (c.is_exact_zero()) continue;
    mpz_bin_uiui(b.get_mpz_t(), n, j);
    const std::int64_t digits = c.is_zero() ? 1 : c.precision();
    sum += c * PadicNumber::from_integer(b, p, digits);
  }
  return n < f.truncation() ? sum : cap_by_tail(sum, f.tail_bound());
}

PadicNumber sample_at(const VanDerPutSeries& g, std::uint64_t n) {
  const std::int64_t p = g.prime();
  if (n >= g.truncation()) {
    const auto digits = floor_log(n, p) + 2;
    return vdp_eval(g, PadicNumber::from_integer(Integer(static_cast<unsigned long>(n)), p, digits));
  }
  // e_m(n) = 1 exactly for m on the chain n, n_-, (n_-)_-, ..., 0.
  PadicNumber sum = g[0];
  for (std::uint64_t m = n; m > 0; m = n_minus(m, p)) sum += g[m];
  return sum;
}

VanDerPutSeries to_van_der_put(const MahlerSeries& f) {
  const std::int64_t p = f.prime();
  const std::size_t m = f.truncation();
  std::vector<PadicNumber> samples;
  samples.reserve(m);
  for (std::uint64_t n = 0; n < m; ++n) samples.push_back(sample_at(f, n));
  std::vector<PadicNumber> v;
  v.reserve(m);
  v.push_back(samples[0]);
  for (std::uint64_t n = 1; n < m; ++n) v.push_back(samples[n] - samples[n_minus(n, p)]);
  const AbsValue tail = max(f.tail_bound(), interpolant_increment_bound(p, f.coefficients(), m));
  return VanDerPutSeries(p, std::move(v), tail);
}

MahlerSeries to_mahler(const VanDerPutSeries& g, std::size_t truncation) {
  if (truncation == 0 || truncation > g.truncation())
    throw DomainError("truncation must lie in [1, " + std::to_string(g.truncation()) + "]");
  const std::int64_t p = g.prime();
  std::vector<PadicNumber> samples;
  samples.reserve(truncation);
  for (std::uint64_t n = 0; n < truncation; ++n) samples.push_back(sample_at(g, n));
  auto c = forward_differences(samples);
  const AbsValue tail = max(g.tail_bound(), interpolant_increment_bound(p, c, truncation));
  return MahlerSeries(p, std::move(c), tail);
}

AbsValue sup_norm(const MahlerSeries& f) {
  return max(max_abs(f.prime(), f.coefficients()), f.tail_bound());
}

AbsValue sup_norm(const VanDerPutSeries& g) {
  return max(max_abs(g.prime(), g.coefficients()), g.tail_bound());
}

}  // namespace padic
