#include "toric/aseries.hpp"

#include "toric/errors.hpp"

#include <map>

namespace toric {

namespace {

BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

void partitions_into(int remaining, int max_part, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_into(remaining - part, part, current, out);
    current.pop_back();
  }
}

PartitionTerm make_term(int n, const std::vector<int>& parts) {
  PartitionTerm t;
  t.parts = parts;
  std::map<int, int> multiplicity;
  BigInt g = 0;
  BigInt shifted = 1;
  for (int p : parts) {
    ++multiplicity[p];
    g = boost::multiprecision::gcd(g, BigInt(p));
    shifted *= factorial(p - 1);
  }
  t.b_lambda = 1;
  for (const auto& [part, count] : multiplicity) {
    BigInt f = factorial(part);
    for (int i = 0; i < count; ++i) t.b_lambda *= f;
    t.b_lambda *= factorial(count);
  }
  t.g_lambda = g;
  const BigInt nf = factorial(n);
  if (nf % t.b_lambda != 0) throw Error("internal: b_lambda does not divide n!");
  t.spaces = nf / t.b_lambda;
  t.layers = t.spaces * t.g_lambda;
  t.poincare_weight = t.layers * shifted;
  return t;
}

}  // namespace

std::vector<std::vector<int>> integer_partitions(int n) {
  if (n < 0) throw DomainError("integer_partitions: n must be nonnegative");
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  partitions_into(n, n, current, out);
  return out;
}

ASeriesCensus a_series_census(int n, int d) {
  if (n < 2) throw DomainError("a_series_census: n must be >= 2");
  ASeriesCensus census;
  census.layer_count = 0;
  for (const auto& parts : integer_partitions(n)) {
    if (static_cast<int>(parts.size()) != d + 1) continue;
    census.terms.push_back(make_term(n, parts));
    census.layer_count += census.terms.back().layers;
  }
  return census;
}

IntPolynomial a_series_poincare(int n) {
  if (n < 2) throw DomainError("a_series_poincare: n must be >= 2");
  const int rank = n - 1;
  IntPolynomial p;
  for (const auto& parts : integer_partitions(n)) {
    const int d = static_cast<int>(parts.size()) - 1;
    p += IntPolynomial::monomial(make_term(n, parts).poincare_weight, 0) * layer_weight(d, rank - d);
  }
  return p;
}

}  // namespace toric
