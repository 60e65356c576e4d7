#include "toric/torus.hpp"

#include "toric/errors.hpp"

#include <numeric>
#include <sstream>

namespace toric {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

TorusPoint::TorusPoint(int rank) : numerators_(static_cast<std::size_t>(rank), 0) {}

TorusPoint::TorusPoint(std::vector<std::int64_t> numerators, std::int64_t denominator)
    : numerators_(std::move(numerators)), denominator_(denominator) {
  if (denominator_ <= 0) throw DomainError("TorusPoint: denominator must be positive");
  normalize();
}

void TorusPoint::normalize() {
  std::int64_t g = denominator_;
  for (auto& x : numerators_) {
    x = mod(x, denominator_);
    g = std::gcd(g, x);
  }
  if (g > 1) {
    for (auto& x : numerators_) x /= g;
    denominator_ /= g;
  }
}

bool TorusPoint::character_trivial(const std::vector<int>& weight) const {
  std::int64_t value = 0;
  for (std::size_t k = 0; k < numerators_.size(); ++k)
    value = mod(value + numerators_[k] * weight[k], denominator_);
  return value == 0;
}

TorusPoint TorusPoint::transform(const std::vector<std::vector<int>>& columns) const {
  const std::size_t n = numerators_.size();
  std::vector<std::int64_t> out(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    if (numerators_[k] == 0) continue;
    for (std::size_t i = 0; i < n; ++i) out[i] += columns[k][i] * numerators_[k];
  }
  return TorusPoint(std::move(out), denominator_);
}

TorusPoint TorusPoint::operator+(const TorusPoint& other) const {
  if (other.rank() != rank()) throw DomainError("TorusPoint: rank mismatch");
  const std::int64_t den = std::lcm(denominator_, other.denominator_);
  std::vector<std::int64_t> out(numerators_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = numerators_[i] * (den / denominator_) + other.numerators_[i] * (den / other.denominator_);
  return TorusPoint(std::move(out), den);
}

std::string TorusPoint::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < numerators_.size(); ++i) {
    if (i) os << ", ";
    const std::int64_t g = std::gcd(numerators_[i], denominator_);
    const std::int64_t num = numerators_[i] / g;
    const std::int64_t den = denominator_ / g;
    os << num;
    if (den != 1) os << '/' << den;
  }
  os << ')';
  return os.str();
}

std::strong_ordering TorusPoint::operator<=>(const TorusPoint& other) const {
  const std::size_t n = std::min(numerators_.size(), other.numerators_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t lhs = numerators_[i] * other.denominator_;
    const std::int64_t rhs = other.numerators_[i] * denominator_;
    if (lhs != rhs) return lhs <=> rhs;
  }
  return numerators_.size() <=> other.numerators_.size();
}

}  // namespace toric
