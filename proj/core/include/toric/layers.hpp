#pragma once

// Counting and topology of the toric arrangement of a root system: points,
// layers per dimension, the layer census by tangent subsystem, the Euler
// characteristic and the Poincaré polynomial of the complement.

#include "toric/bigint.hpp"
#include "toric/limits.hpp"
#include "toric/polynomial.hpp"
#include "toric/rootsys.hpp"
#include "toric/subsys.hpp"
#include "toric/types.hpp"

#include <vector>

namespace toric {

/// One W-orbit of points, indexed by the affine vertex p.
struct PointOrbitRecord {
  int vertex;
  int mark;
  /// |W| / |W_p|
  BigInt orbit_size;
  /// Type of Φ_p (the diagram with vertex p removed).
  CartanType point_type;
  /// |W_p|
  BigInt stabilizer_order;
  /// |Stab_{Aut(Γ)} p|
  std::size_t aut_stabilizer_order;
  /// |Stab_Ω p| for the subgroup Ω ≅ Z(Φ) of Aut(Γ) induced by W_Z.
  std::size_t center_stabilizer_order;
};

struct PointOrbits {
  CartanType type;
  std::vector<PointOrbitRecord> records;
  /// Aut(Γ)-orbits of vertices.
  std::vector<std::vector<int>> aut_orbits;
  /// Σ_p |W|/|W_p|
  BigInt total;
  /// Σ_q |q| |W|/|W_p| over Aut(Γ)-orbits.
  BigInt total_by_aut_orbits;
};

/// Irreducible Φ only.
PointOrbits point_orbits(const RootSystem& phi);

/// Number of 0-dimensional layers; multiplicative over irreducible factors.
/// Needs only diagram and degree data, so it works through E8.
BigInt count_points(const CartanType& type);

/// [R^Φ(Θ) : <Θ^∨>] computed from lattice indices; Θ must be complete.
BigInt n_theta(const RootSystem& phi, const Subsystem& theta);

/// |C_d(Φ)| = Σ_{Θ ∈ K_d} |C_0(Θ)| / n_Θ.
BigInt count_layers(const RootSystem& phi, int d, const Limits& limits = {});

struct PhiCTypeCount {
  CartanType type;
  BigInt count;

  friend bool operator==(const PhiCTypeCount&, const PhiCTypeCount&) = default;
};

/// Layers tangent to one W-orbit of complete subsystems.
struct LayerClassRecord {
  int d;
  Subsystem tangent;
  std::size_t orbit_size;
  BigInt n_theta;
  /// |W^Θ| from the type tables.
  BigInt tangent_weyl_order;
  BigInt layer_count_per_theta;
  /// Multiset of Φ_C types over the layers tangent to one Θ, sorted by type.
  std::vector<PhiCTypeCount> phi_c_types;
};

struct LayerCensus {
  CartanType type;
  int rank = 0;
  /// Ordered by dimension, then by representative root set.
  std::vector<LayerClassRecord> records;

  BigInt layers_at(int d) const;
};

LayerCensus layer_census(const RootSystem& phi, const Limits& limits = {});

enum class PoincareRoute { ClosedForm, LayerSum };

/// Σ_{Θ ∈ K_d} |W^Θ| / n_Θ for d = 0..n (index d).
std::vector<BigInt> closed_form_weights(const RootSystem& phi, const Limits& limits = {});

IntPolynomial poincare(const RootSystem& phi, PoincareRoute route, const Limits& limits = {});
IntPolynomial poincare_from_weights(const std::vector<BigInt>& weights);
IntPolynomial poincare_from_census(const LayerCensus& census);

struct EulerCharacteristic {
  /// (-1)^n Π d_i
  BigInt closed_form;
  /// (-1)^n Σ_p (|W|/|W_p|) P(Φ_p): contributions of the points only.
  BigInt via_points;
  /// P(-1), present when the Poincaré polynomial was computable.
  bool poincare_available = false;
  BigInt via_poincare;

  bool agree() const {
    return closed_form == via_points && (!poincare_available || closed_form == via_poincare);
  }
};

EulerCharacteristic euler_characteristic(const RootSystem& phi, const Limits& limits = {});

/// E~ = k ϱ_W.
struct RegularCharacterMultiple {
  int k;
};

RegularCharacterMultiple equivariant_euler(const CartanType& type);

struct DegreeIdentityTerm {
  int vertex;
  CartanType type;
  BigInt exponent_product;
  BigInt weyl_order;
};

struct DegreeIdentity {
  BigRational sum;
  std::vector<DegreeIdentityTerm> terms;

  bool holds() const { return sum == 1; }
};

/// Σ_p Π(d_i^p - 1) / Π d_i^p over the vertex deletions of the affine diagram.
DegreeIdentity verify_degree_identity(const TypeSymbol& type);

}  // namespace toric
