#pragma once

// Closed and complete subsystems of a root system, enumeration of the
// complete subsystems K_d by rank, and their classification up to W.

#include "toric/intlat.hpp"
#include "toric/limits.hpp"
#include "toric/rootsys.hpp"
#include "toric/types.hpp"
#include "toric/weyl.hpp"

#include <cstddef>
#include <vector>

namespace toric {

/// Sorted indices into RootSystem::roots().
using RootSet = std::vector<std::size_t>;

struct Subsystem {
  RootSet roots;
  int rank = 0;
  bool complete = false;
  CartanType type;
  /// Rows: Hermite-normal basis of span_Q(roots) ∩ Z^n in root coordinates.
  IntMatrix span_basis;

  RootSet positive_roots(const RootSystem& phi) const;
};

/// Negation-closed and closed under root addition inside phi.
bool is_closed(const RootSystem& phi, const RootSet& roots);

/// Builds the record for a closed subset; throws DomainError if not closed.
Subsystem make_subsystem(const RootSystem& phi, RootSet roots);

/// Roots of theta ∩ Φ⁺ that are not a sum of two such roots.
RootSet simple_system(const RootSystem& phi, const RootSet& theta);

/// Type of a closed subsystem; throws DomainError when it is not closed.
CartanType decompose_type(const RootSystem& phi, const RootSet& theta);

/// All roots in the rational span of `generators`.
Subsystem completion(const RootSystem& phi, const RootSet& generators);

struct OrbitClass {
  /// Index (into the family's members) of the lexicographically smallest member.
  std::size_t representative;
  std::vector<std::size_t> members;
};

struct CompleteFamily {
  /// Dimension of the corresponding layers; members have rank n - d.
  int d = 0;
  std::vector<Subsystem> members;
  std::vector<OrbitClass> orbit_partition;
};

/// Throws CapabilityError (bound "enumeration-rank") when complete
/// subsystems of `type` are outside the configured enumeration capability.
void check_enumerable(const CartanType& type, const Limits& limits);

/// Complete subsystems of rank n - d, sorted by root set, with their
/// W-orbit partition.
CompleteFamily enumerate_complete(const RootSystem& phi, int d, const Limits& limits = {});

/// Families for d = 0..n (index d).
std::vector<CompleteFamily> enumerate_all_complete(const RootSystem& phi, const Limits& limits = {});

/// W-orbits of a family; representatives are the lexicographically minimal
/// members and classes are ordered by representative.
std::vector<OrbitClass> w_orbit_census(const WeylGroup& w, const std::vector<Subsystem>& members);

}  // namespace toric
