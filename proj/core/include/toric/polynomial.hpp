#pragma once

#include "toric/bigint.hpp"

#include <string>
#include <vector>

namespace toric {

/// Polynomial in q with arbitrary-precision integer coefficients.
/// coefficients()[k] is the coefficient of q^k; trailing zeros are trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  static IntPolynomial monomial(const BigInt& coefficient, int power);

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coefficient(int power) const;
  BigInt evaluate(const BigInt& q) const;

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial& operator+=(const IntPolynomial& rhs);

  /// Descending powers, e.g. "2153q^4+1260q^3+286q^2+28q+1".
  std::string str() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// (q+1)^a q^b
IntPolynomial layer_weight(int a, int b);

}  // namespace toric
