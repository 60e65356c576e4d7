#pragma once

// Closed formulas for type A_{n-1}, computed purely from integer partitions
// of n and independent of the subsystem machinery.

#include "toric/bigint.hpp"
#include "toric/polynomial.hpp"

#include <vector>

namespace toric {

/// Partitions of n with parts in non-increasing order, in reverse
/// lexicographic order ((n) first).
std::vector<std::vector<int>> integer_partitions(int n);

struct PartitionTerm {
  std::vector<int> parts;
  /// Π i!^{b_i} b_i! where b_i counts the parts equal to i.
  BigInt b_lambda;
  /// gcd of the parts.
  BigInt g_lambda;
  /// n!/b_λ spaces of this partition type.
  BigInt spaces;
  /// n! g_λ / b_λ layers tangent to those spaces.
  BigInt layers;
  /// n! g_λ / b_λ · Π (λ_i - 1)!
  BigInt poincare_weight;
};

struct ASeriesCensus {
  BigInt layer_count;
  std::vector<PartitionTerm> terms;
};

/// Layers of dimension d for A_{n-1}: partitions of n with d + 1 parts.
ASeriesCensus a_series_census(int n, int d);

/// Poincaré polynomial of the complement for A_{n-1} (rank n - 1).
IntPolynomial a_series_poincare(int n);

}  // namespace toric
