#include "toric/polynomial.hpp"

#include "toric/errors.hpp"

#include <algorithm>

namespace toric {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(const BigInt& coefficient, int power) {
  if (power < 0) throw DomainError("negative exponent");
  std::vector<BigInt> c(static_cast<std::size_t>(power) + 1);
  c.back() = coefficient;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

BigInt IntPolynomial::evaluate(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  IntPolynomial out = *this;
  out += rhs;
  return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (coeffs_.empty() || rhs.coeffs_.empty()) return {};
  std::vector<BigInt> c(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (negative)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (mag != 1 || k == 0) out += mag.str();
    if (k >= 1) out += 'q';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

IntPolynomial layer_weight(int a, int b) {
  IntPolynomial out = IntPolynomial::monomial(1, b);
  const IntPolynomial q_plus_one(std::vector<BigInt>{1, 1});
  for (int i = 0; i < a; ++i) out = out * q_plus_one;
  return out;
}

}  // namespace toric
