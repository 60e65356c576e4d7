#pragma once

// The Weyl group as a permutation group on the root list.

#include "toric/bigint.hpp"
#include "toric/limits.hpp"
#include "toric/rootsys.hpp"
#include "toric/torus.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace toric {

/// A Weyl group element as a permutation of root indices (positives and
/// negatives). Composition is (a * b)(x) = a(b(x)).
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(std::vector<std::uint16_t> perm) : perm_(std::move(perm)) {}
  static WeylElement identity(std::size_t num_roots);

  std::size_t operator()(std::size_t root) const { return perm_[root]; }
  const std::vector<std::uint16_t>& permutation() const noexcept { return perm_; }

  WeylElement operator*(const WeylElement& rhs) const;
  WeylElement inverse() const;
  bool is_identity() const;

  /// Number of positive roots sent to negative roots.
  int length(const RootSystem& phi) const;

  /// Column k = simple-coroot coordinates of w(alpha_k^vee).
  std::vector<std::vector<int>> coroot_action(const RootSystem& phi) const;

  /// Image of a set of root indices, sorted.
  std::vector<std::size_t> apply(const std::vector<std::size_t>& roots) const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

 private:
  std::vector<std::uint16_t> perm_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept;
};

/// Reflection s_i for 1 <= i <= n: beta -> beta - <beta, alpha_i^vee> alpha_i.
WeylElement simple_reflection(const RootSystem& phi, int i);

/// Reflection in an arbitrary root.
WeylElement root_reflection(const RootSystem& phi, std::size_t root);

/// Debug check: w is a bijection preserving <w a, (w b)^vee> = <a, b^vee>.
bool preserves_pairing(const RootSystem& phi, const WeylElement& w);

class WeylGroup {
 public:
  explicit WeylGroup(RootSystem phi);

  const RootSystem& roots() const noexcept { return *phi_; }
  std::shared_ptr<const RootSystem> root_system_ptr() const noexcept { return phi_; }
  int rank() const noexcept { return phi_->rank(); }
  /// s_1..s_n, stored at positions 0..n-1.
  const std::vector<WeylElement>& generators() const noexcept { return generators_; }
  /// |W| from the degree table.
  BigInt order() const;

  /// All elements in shortlex order of their reduced words. Throws
  /// CapabilityError naming "max-group-order" when |W| exceeds `max_order`.
  std::vector<WeylElement> enumerate(std::uint64_t max_order) const;

  /// Elements of the subgroup generated by the listed simple reflections
  /// (1-based indices), in shortlex order.
  std::vector<WeylElement> enumerate_parabolic(const std::vector<int>& simple,
                                               std::uint64_t max_order) const;

 private:
  std::shared_ptr<const RootSystem> phi_;
  std::vector<WeylElement> generators_;
};

struct OrbitStabilizer {
  std::size_t orbit_size = 0;
  BigInt stabilizer_order;
  /// Schreier generators of the stabilizer, deduplicated, identity removed.
  std::vector<WeylElement> stabilizer_generators;
};

/// Orbit of a set of root indices. Throws CapabilityError when the orbit
/// exceeds limits.max_group_order.
OrbitStabilizer orbit_and_stabilizer(const WeylGroup& w, const std::vector<std::size_t>& root_set,
                                     const Limits& limits = {});
/// Orbit of a torsion point of T.
OrbitStabilizer orbit_and_stabilizer(const WeylGroup& w, const TorusPoint& point,
                                     const Limits& limits = {});

/// Orbit (as a sorted list) of a torsion point.
std::vector<TorusPoint> orbit(const WeylGroup& w, const TorusPoint& point, const Limits& limits = {});

/// w_0 when `vertex` is empty; otherwise the longest element of the
/// parabolic subgroup generated by all simple reflections except s_vertex.
WeylElement longest_element(const WeylGroup& w, std::optional<int> vertex = std::nullopt);

struct CenterElement {
  /// Affine vertex p (0 for the identity).
  int vertex;
  /// z_p = w_0^p w_0 (identity for vertex 0).
  WeylElement element;
  /// Induced permutation of affine vertices: perm[q] = image of q.
  std::vector<int> diagram_permutation;
};

/// The subgroup W_Z: identity plus z_p for every p >= 1 with mark a_p = 1.
std::vector<CenterElement> center_subgroup(const WeylGroup& w);

}  // namespace toric
