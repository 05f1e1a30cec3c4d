#include "padic/ccr.hpp"

#include <algorithm>
#include <string>

namespace padic {

namespace {

PadicNumber times_integer(const PadicNumber& c, std::uint64_t k) {
  if (c.is_exact_zero()) return c;
  const std::int64_t digits = c.is_zero() ? 1 : c.precision();
  return PadicNumber::from_integer(Integer(static_cast<unsigned long>(k)), c.prime(), digits) * c;
}

PadicNumber unknown_below_tail(std::int64_t p, AbsValue tail) {
  return tail.is_zero() ? PadicNumber::zero(p) : PadicNumber::zero(p, tail.exponent());
}

}  // namespace

std::string_view to_string(Ladder op) {
  switch (op) {
    case Ladder::raising: return "raising";
    case Ladder::lowering: return "lowering";
    case Ladder::hamiltonian: return "hamiltonian";
  }
  return "?";
}

Ladder parse_ladder(std::string_view name) {
  if (name == "raising") return Ladder::raising;
  if (name == "lowering") return Ladder::lowering;
  if (name == "hamiltonian") return Ladder::hamiltonian;
  throw DomainError("unknown operator '" + std::string(name) + "'");
}

MahlerSeries apply_raising(const MahlerSeries& f) {
  const std::int64_t p = f.prime();
  const std::size_t m = f.truncation();
  std::vector<PadicNumber> c;
  c.reserve(m);
  c.push_back(PadicNumber::zero(p));
  for (std::size_t n = 0; n + 1 < m; ++n) c.push_back(times_integer(f[n], n + 1));
  const AbsValue spill = times_integer(f[m - 1], m).abs();
  return MahlerSeries(p, std::move(c), max(f.tail_bound(), spill));
}

MahlerSeries apply_lowering(const MahlerSeries& f) {
  const std::int64_t p = f.prime();
  std::vector<PadicNumber> c(f.coefficients().begin() + 1, f.coefficients().end());
  c.push_back(unknown_below_tail(p, f.tail_bound()));
  return MahlerSeries(p, std::move(c), f.tail_bound());
}

MahlerSeries hamiltonian(const MahlerSeries& f) {
  std::vector<PadicNumber> c;
  c.reserve(f.truncation());
  for (std::size_t n = 0; n < f.truncation(); ++n)
    c.push_back(n == 0 ? PadicNumber::zero(f.prime()) : times_integer(f[n], n));
  return MahlerSeries(f.prime(), std::move(c), f.tail_bound());
}

MahlerSeries apply(Ladder op, const MahlerSeries& f) {
  switch (op) {
    case Ladder::raising: return apply_raising(f);
    case Ladder::lowering: return apply_lowering(f);
    case Ladder::hamiltonian: return hamiltonian(f);
  }
  throw DomainError("unknown ladder operator");
}

MahlerSeries commutator_defect(const MahlerSeries& f) {
  return apply_lowering(apply_raising(f)) - apply_raising(apply_lowering(f)) - f;
}

OperatorMatrix::OperatorMatrix(std::int64_t p, std::size_t dimension)
    : p_(p), dim_(dimension), data_(dimension * dimension, PadicNumber::zero(p)) {
  if (dimension == 0) throw DomainError("matrix dimension must be positive");
}

OperatorMatrix OperatorMatrix::identity(std::int64_t p, std::size_t dimension, std::int64_t precision) {
  OperatorMatrix m(p, dimension);
  for (std::size_t i = 0; i < dimension; ++i) m.set(i, i, PadicNumber::one(p, precision));
  return m;
}

OperatorMatrix OperatorMatrix::from_entries(std::int64_t p, std::size_t dimension,
                                            std::span<const MatrixEntry> entries) {
  OperatorMatrix m(p, dimension);
  for (const auto& e : entries) {
    if (e.row >= dimension || e.col >= dimension) throw DomainError("matrix entry out of range");
    m.set(e.row, e.col, e.value);
  }
  return m;
}

void OperatorMatrix::set(std::size_t i, std::size_t j, PadicNumber value) {
  if (value.prime() != p_) throw PrimeMismatch(p_, value.prime());
  data_.at(i * dim_ + j) = std::move(value);
}

std::int64_t OperatorMatrix::precision() const {
  std::int64_t best = 0;
  for (const auto& x : data_)
    if (!x.is_zero()) best = best == 0 ? x.precision() : std::min(best, x.precision());
  return best;
}

bool OperatorMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const PadicNumber& x) { return x.is_zero(); });
}

std::vector<MatrixEntry> OperatorMatrix::nonzero_entries() const {
  std::vector<MatrixEntry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (!(*this)(i, j).is_exact_zero()) out.push_back({i, j, (*this)(i, j)});
  return out;
}

std::vector<PadicNumber> OperatorMatrix::apply(std::span<const PadicNumber> v) const {
  if (v.size() != dim_) throw DomainError("vector length does not match matrix dimension");
  std::vector<PadicNumber> out;
  out.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    PadicNumber sum = PadicNumber::zero(p_);
    for (std::size_t j = 0; j < dim_; ++j) {
      const PadicNumber& a = (*this)(i, j);
      if (a.is_exact_zero() || v[j].is_exact_zero()) continue;
      sum += a * v[j];
    }
    out.push_back(std::move(sum));
  }
  return out;
}

MahlerSeries OperatorMatrix::apply(const MahlerSeries& f) const {
  if (f.prime() != p_) throw PrimeMismatch(p_, f.prime());
  return MahlerSeries(p_, apply(f.coefficients()), f.tail_bound());
}

OperatorMatrix OperatorMatrix::scaled(const PadicNumber& c) const {
  OperatorMatrix out(p_, dim_);
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!data_[k].is_exact_zero()) out.data_[k] = c * data_[k];
  return out;
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.p_ != b.p_) throw PrimeMismatch(a.p_, b.p_);
  if (a.dim_ != b.dim_) throw DomainError("matrix dimension mismatch");
  OperatorMatrix out(a.p_, a.dim_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] + b.data_[k];
  return out;
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.p_ != b.p_) throw PrimeMismatch(a.p_, b.p_);
  if (a.dim_ != b.dim_) throw DomainError("matrix dimension mismatch");
  OperatorMatrix out(a.p_, a.dim_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] - b.data_[k];
  return out;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.p_ != b.p_) throw PrimeMismatch(a.p_, b.p_);
  if (a.dim_ != b.dim_) throw DomainError("matrix dimension mismatch");
  const std::size_t n = a.dim_;
  OperatorMatrix out(a.p_, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const PadicNumber& aik = a(i, k);
      if (aik.is_exact_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const PadicNumber& bkj = b(k, j);
        if (bkj.is_exact_zero()) continue;
        out.data_[i * n + j] += aik * bkj;
      }
    }
  }
  return out;
}

bool congruent(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.prime() != b.prime() || a.dimension() != b.dimension()) return false;
  for (std::size_t i = 0; i < a.dimension(); ++i)
    for (std::size_t j = 0; j < a.dimension(); ++j)
      if (!congruent(a(i, j), b(i, j))) return false;
  return true;
}

OperatorMatrix as_matrix(Ladder op, std::int64_t p, std::size_t dimension, std::int64_t precision) {
  OperatorMatrix m(p, dimension);
  auto integer = [&](std::size_t k) {
    return PadicNumber::from_integer(Integer(static_cast<unsigned long>(k)), p, precision);
  };
  for (std::size_t n = 0; n < dimension; ++n) {
    switch (op) {
      case Ladder::lowering:
        if (n + 1 < dimension) m.set(n, n + 1, PadicNumber::one(p, precision));
        break;
      case Ladder::raising:
        if (n + 1 < dimension) m.set(n + 1, n, integer(n + 1));
        break;
      case Ladder::hamiltonian:
        if (n > 0) m.set(n, n, integer(n));
        break;
    }
  }
  return m;
}

OperatorMatrix as_matrix(std::span<const Ladder> composition, std::int64_t p, std::size_t dimension,
                         std::int64_t precision) {
  OperatorMatrix out = OperatorMatrix::identity(p, dimension, precision);
  for (Ladder op : composition) out = out * as_matrix(op, p, dimension, precision);
  return out;
}

std::vector<MahlerSeries> kernel_solve(const OperatorMatrix& a) {
  const std::int64_t p = a.prime();
  const std::size_t n = a.dimension();
  const std::int64_t precision = std::max<std::int64_t>(a.precision(), 1);

  std::vector<std::vector<PadicNumber>> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i].push_back(a(i, j));

  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> free_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = n;
    for (std::size_t r = rank; r < n; ++r) {
      const PadicNumber& x = rows[r][col];
      if (x.is_zero()) continue;
      if (best == n || x.valuation() < rows[best][col].valuation()) best = r;
    }
    if (best == n) {
      for (std::size_t r = rank; r < n; ++r) {
        const PadicNumber& x = rows[r][col];
        if (!x.is_exact_zero() && x.valuation() < 1)
          throw PrecisionExhausted("kernel_solve: column " + std::to_string(col) +
                                   " is not decidable at the available precision");
      }
      free_cols.push_back(col);
      continue;
    }
    std::swap(rows[rank], rows[best]);
    const PadicNumber pivot = rows[rank][col];
    for (std::size_t j = col; j < n; ++j)
      if (!rows[rank][j].is_exact_zero()) rows[rank][j] = rows[rank][j] / pivot;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || rows[r][col].is_exact_zero()) continue;
      const PadicNumber factor = rows[r][col];
      for (std::size_t j = col; j < n; ++j) {
        if (rows[rank][j].is_exact_zero()) continue;
        rows[r][j] -= factor * rows[rank][j];
      }
      rows[r][col] = PadicNumber::zero(p);
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  std::vector<MahlerSeries> basis;
  for (std::size_t f : free_cols) {
    std::vector<PadicNumber> v(n, PadicNumber::zero(p));
    v[f] = PadicNumber::one(p, precision);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      const PadicNumber& x = rows[i][f];
      if (!x.is_exact_zero()) v[pivot_cols[i]] = -x;
    }
    basis.emplace_back(p, std::move(v));
  }
  return basis;
}

}  // namespace padic
