#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "padic/function_space.hpp"

namespace padic {

// Ladder operators on C(Z_p, Q_p):
//   (a+ f)(x) = x f(x-1)          a+ P_n = (n+1) P_(n+1)
//   (a- f)(x) = f(x+1) - f(x)     a- P_n = P_(n-1),  a- P_0 = 0
//   H = a+ a-                     H P_n = n P_n
enum class Ladder { raising, lowering, hamiltonian };

std::string_view to_string(Ladder op);
Ladder parse_ladder(std::string_view name);

// c'_0 = 0, c'_(n+1) = (n+1) c_n. The coefficient M c_(M-1) that would land at
// index M is folded into the tail bound.
MahlerSeries apply_raising(const MahlerSeries& f);
// c'_n = c_(n+1). The new top coefficient c_M is unknown beyond the tail bound
// and is stored as 0 + O(tail).
MahlerSeries apply_lowering(const MahlerSeries& f);
// c'_n = n c_n.
MahlerSeries hamiltonian(const MahlerSeries& f);
MahlerSeries apply(Ladder op, const MahlerSeries& f);

// (a- a+ - a+ a-) f - f. Zero on indices 0..M-2; index M-1 is a truncation
// artifact covered by the tail bound.
MahlerSeries commutator_defect(const MahlerSeries& f);

struct MatrixEntry {
  std::size_t row;
  std::size_t col;
  PadicNumber value;

  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

// Square matrix over Q_p acting on truncated Mahler coefficient vectors
// (column convention: (A c)_i = sum_j A_ij c_j). Unset entries are exact zeros.
class OperatorMatrix {
 public:
  OperatorMatrix(std::int64_t p, std::size_t dimension);
  static OperatorMatrix identity(std::int64_t p, std::size_t dimension, std::int64_t precision);
  static OperatorMatrix from_entries(std::int64_t p, std::size_t dimension,
                                     std::span<const MatrixEntry> entries);

  std::int64_t prime() const { return p_; }
  std::size_t dimension() const { return dim_; }
  const PadicNumber& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  void set(std::size_t i, std::size_t j, PadicNumber value);

  // Smallest relative precision over nonzero entries; 0 for the zero matrix.
  std::int64_t precision() const;
  bool is_zero() const;
  std::vector<MatrixEntry> nonzero_entries() const;

  std::vector<PadicNumber> apply(std::span<const PadicNumber> v) const;
  // Acts on the stored coefficients; the tail bound is passed through, which
  // is valid for operators of norm <= 1 that preserve the tail (the ladder
  // operators and their compositions).
  MahlerSeries apply(const MahlerSeries& f) const;

  OperatorMatrix scaled(const PadicNumber& c) const;

  friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
  friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;

 private:
  std::int64_t p_;
  std::size_t dim_;
  std::vector<PadicNumber> data_;
};

// Entry-wise agreement at the available precision.
bool congruent(const OperatorMatrix& a, const OperatorMatrix& b);

OperatorMatrix as_matrix(Ladder op, std::int64_t p, std::size_t dimension, std::int64_t precision);
// Product composition[0] * composition[1] * ...; the last entry acts first.
OperatorMatrix as_matrix(std::span<const Ladder> composition, std::int64_t p, std::size_t dimension,
                         std::int64_t precision);

/**
 * Basis of the null space of a, by Gauss-Jordan elimination over Q_p. The
 * pivot in each column is the entry of largest |.|_p, ties to the lowest row.
 * A zero marker counts as zero; a column whose candidates are all zero markers,
 * at least one of them not even known mod p, makes the rank undecidable and
 * throws PrecisionExhausted. Each basis vector has a 1 in its free column.
 */
std::vector<MahlerSeries> kernel_solve(const OperatorMatrix& a);

}  // namespace padic
