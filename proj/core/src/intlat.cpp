#include "toric/intlat.hpp"

#include "toric/errors.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <utility>

namespace toric {

using boost::multiprecision::abs;

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("IntMatrix: ragged initializer");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DomainError("IntMatrix: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DomainError("IntMatrix: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<BigInt> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("IntMatrix: dimension mismatch in product");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

std::size_t SmithDecomposition::rank() const {
  return static_cast<std::size_t>(
      std::count_if(divisors.begin(), divisors.end(), [](const BigInt& d) { return d != 0; }));
}

namespace {

// Quotient rounded toward zero, so |a - q*b| < |b|.
BigInt trunc_div(const BigInt& a, const BigInt& b) { return a / b; }

// Floor division for the Hermite reduction step.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Tracks A together with the transforms L, R (and their inverses) so that
// L * M * R == A at every step.
class SmithState {
 public:
  explicit SmithState(const IntMatrix& m)
      : a(m),
        left(IntMatrix::identity(m.rows())),
        left_inv(IntMatrix::identity(m.rows())),
        right(IntMatrix::identity(m.cols())),
        right_inv(IntMatrix::identity(m.cols())) {}

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    left.swap_rows(i, j);
    left_inv.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    right.swap_cols(i, j);
    right_inv.swap_rows(i, j);
  }
  void add_row(std::size_t dst, std::size_t src, const BigInt& f) {
    a.add_row_multiple(dst, src, f);
    left.add_row_multiple(dst, src, f);
    left_inv.add_col_multiple(src, dst, -f);
  }
  void add_col(std::size_t dst, std::size_t src, const BigInt& f) {
    a.add_col_multiple(dst, src, f);
    right.add_col_multiple(dst, src, f);
    right_inv.add_row_multiple(src, dst, -f);
  }
  void negate_row(std::size_t r) {
    a.negate_row(r);
    left.negate_row(r);
    for (std::size_t i = 0; i < left_inv.rows(); ++i) left_inv(i, r) = -left_inv(i, r);
  }

  IntMatrix a, left, left_inv, right, right_inv;
};

// Nonzero entry of minimal absolute value in the block rows/cols >= t;
// ties go to the lowest row, then the lowest column.
std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const IntMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  BigInt best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      BigInt v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithState s(m);
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    for (;;) {
      auto pivot = min_pivot(s.a, t);
      if (!pivot) break;
      s.swap_rows(t, pivot->first);
      s.swap_cols(t, pivot->second);
      const BigInt p = s.a(t, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < s.a.rows(); ++i) {
        if (s.a(i, t) == 0) continue;
        s.add_row(i, t, -trunc_div(s.a(i, t), p));
        if (s.a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s.a.cols(); ++j) {
        if (s.a(t, j) == 0) continue;
        s.add_col(j, t, -trunc_div(s.a(t, j), p));
        if (s.a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the remaining block; otherwise fold the offending row in.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < s.a.rows() && !bad_row; ++i)
        for (std::size_t j = t + 1; j < s.a.cols(); ++j)
          if (s.a(i, j) % p != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      s.add_row(t, *bad_row, 1);
    }
    if (s.a(t, t) < 0) s.negate_row(t);
  }

  SmithDecomposition out;
  out.divisors.reserve(limit);
  for (std::size_t t = 0; t < limit; ++t) out.divisors.push_back(s.a(t, t));
  out.diagonal = std::move(s.a);
  out.left = std::move(s.left);
  out.left_inverse = std::move(s.left_inv);
  out.right = std::move(s.right);
  out.right_inverse = std::move(s.right_inv);
  return out;
}

BigInt quotient_torsion(const IntMatrix& generators) {
  BigInt product = 1;
  for (const auto& d : smith_normal_form(generators).divisors)
    if (d != 0) product *= d;
  return product;
}

BigInt quotient_exponent(const IntMatrix& generators) {
  BigInt exponent = 1;
  for (const auto& d : smith_normal_form(generators).divisors)
    if (d != 0) exponent = d;
  return exponent;
}

Saturation saturate(const IntMatrix& generators) {
  const auto snf = smith_normal_form(generators);
  const std::size_t r = snf.rank();
  IntMatrix basis(r, generators.cols());
  BigInt index = 1;
  for (std::size_t i = 0; i < r; ++i) {
    index *= snf.divisors[i];
    for (std::size_t j = 0; j < generators.cols(); ++j) basis(i, j) = snf.right_inverse(i, j);
  }
  return {hermite_normal_form(basis), index};
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t pivot_row = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    // Euclid on column c among rows >= pivot_row.
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = pivot_row; i < a.rows(); ++i)
        if (a(i, c) != 0 && (!best || abs(a(i, c)) < abs(a(*best, c)))) best = i;
      if (!best) break;
      a.swap_rows(pivot_row, *best);
      bool done = true;
      for (std::size_t i = pivot_row + 1; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        a.add_row_multiple(i, pivot_row, -trunc_div(a(i, c), a(pivot_row, c)));
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(pivot_row, c) == 0) continue;
    if (a(pivot_row, c) < 0) a.negate_row(pivot_row);
    for (std::size_t i = 0; i < pivot_row; ++i)
      a.add_row_multiple(i, pivot_row, -floor_div(a(i, c), a(pivot_row, c)));
    ++pivot_row;
  }
  IntMatrix out(pivot_row, a.cols());
  for (std::size_t i = 0; i < pivot_row; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

std::size_t rank(const IntMatrix& m) { return hermite_normal_form(m).rows(); }

IntMatrix kernel(const IntMatrix& m) {
  const auto snf = smith_normal_form(m);
  const std::size_t r = snf.rank();
  IntMatrix out(m.cols() - r, m.cols());
  for (std::size_t i = r; i < m.cols(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i - r, j) = snf.right(j, i);
  return hermite_normal_form(out);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("unimodular_inverse: matrix is not square");
  const auto snf = smith_normal_form(m);
  for (const auto& d : snf.divisors)
    if (d != 1) throw DomainError("unimodular_inverse: matrix is not unimodular");
  return snf.right * snf.left;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace toric
