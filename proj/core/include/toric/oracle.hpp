#pragma once

// Brute-force cross-checks: torsion points of T found by scanning a finite
// grid, connected components of subtori via elementary divisors, and the
// explicit poset of layers at small rank.

#include "toric/bigint.hpp"
#include "toric/limits.hpp"
#include "toric/rootsys.hpp"
#include "toric/subsys.hpp"
#include "toric/torus.hpp"
#include "toric/types.hpp"

#include <cstdint>
#include <vector>

namespace toric {

struct BrutePoint {
  TorusPoint point;
  /// Φ(t): roots whose character is trivial at t.
  RootSet roots;
  CartanType type;
  /// |W(t)| from the orbit size.
  BigInt stabilizer_order;
  /// Stabilizer of t in W ⋉ Z(Φ), the center acting by coweight translations.
  BigInt wz_stabilizer_order;
  /// Affine vertex p with t in the W-orbit of ω_p^∨ / a_p (-1 for reducible Φ).
  int vertex = -1;
};

struct BruteResult {
  /// Grid (1/M) Z^n scanned.
  std::int64_t grid_modulus = 1;
  /// Sorted by point.
  std::vector<BrutePoint> points;
};

/// Points t of T with rank Φ(t) = n. Throws CapabilityError ("brute-rank").
BruteResult brute_points(const RootSystem& phi, const Limits& limits = {});

/// Simple-coroot coordinates of the fundamental coweight ω_k^∨ (0-based k).
std::vector<BigRational> fundamental_coweight(const RootSystem& phi, int k);

/// Connected components of the subgroup ∩_{α ∈ Θ} ker e^α, i.e. the torsion
/// of the weight lattice modulo <Θ>.
BigInt kernel_component_count(const RootSystem& phi, const Subsystem& theta);

/// Layers of the arrangement whose tangent subsystem is Θ, found by scanning
/// the torsion points of T / T_Θ. Throws DomainError unless Θ is complete.
BigInt component_count(const RootSystem& phi, const Subsystem& theta);

struct ExplicitLayer {
  int d = 0;
  Subsystem theta;
  /// Lexicographically smallest point of the layer on the grid (1/M) Z^n
  /// used to scan T / T_Θ.
  TorusPoint base_point;
  /// Image of the layer in T / T_Θ, in a basis of the saturation of <Θ>.
  TorusPoint label;
  /// Φ_C: roots trivial on the whole layer, and its type.
  RootSet roots;
  CartanType type;
};

struct LayerPoset {
  CartanType type;
  int rank = 0;
  /// Ordered by dimension, then tangent root set, then base point.
  std::vector<ExplicitLayer> elements;
  /// leq[i][j]: element i is contained in element j.
  std::vector<std::vector<char>> leq;
  /// Covering pairs (lower, upper), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  std::size_t count_at(int d) const;
  bool is_partial_order() const;
};

/// Throws CapabilityError ("poset-rank") when rank exceeds limits.poset_rank.
LayerPoset build_poset(const RootSystem& phi, const Limits& limits = {});

}  // namespace toric
