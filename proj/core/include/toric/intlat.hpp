#pragma once

// Exact integer lattice algebra: Smith and Hermite normal forms, quotient
// torsion, saturation and kernels. Generators are always stored as rows.

#include "toric/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace toric {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols);
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<BigInt> row(std::size_t r) const;
  IntMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void negate_row(std::size_t r);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// left * M * right == diagonal, with left and right unimodular.
struct SmithDecomposition {
  IntMatrix left;
  IntMatrix right;
  IntMatrix left_inverse;
  IntMatrix right_inverse;
  IntMatrix diagonal;
  /// Diagonal entries d_1 | d_2 | ... | d_r followed by zeros; length min(rows, cols).
  std::vector<BigInt> divisors;

  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Order of the torsion subgroup of Z^k / L where the rows of `generators` span L.
BigInt quotient_torsion(const IntMatrix& generators);

/// Exponent (largest elementary divisor) of the torsion subgroup of Z^k / L.
BigInt quotient_exponent(const IntMatrix& generators);

struct Saturation {
  /// Rows form a basis of span_Q(L) ∩ Z^k, in Hermite normal form.
  IntMatrix basis;
  /// [saturation : L]
  BigInt index;
};

Saturation saturate(const IntMatrix& generators);

/// Row-style Hermite normal form with zero rows dropped: echelon, positive
/// pivots, entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Basis (as rows) of the integer vectors y with M y = 0.
IntMatrix kernel(const IntMatrix& m);

/// Inverse of a unimodular matrix; throws DomainError otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

BigInt determinant(const IntMatrix& m);

}  // namespace toric
