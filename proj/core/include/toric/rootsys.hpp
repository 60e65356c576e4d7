#pragma once

// Root systems with exact integer data. Roots carry coordinates in the
// simple-root basis, coroots in the simple-coroot basis, and the pairing is
// <alpha_j, alpha_i^vee> = C[i][j].

#include "toric/bigint.hpp"
#include "toric/types.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace toric {

using RootVector = std::vector<int>;

class RootSystem {
 public:
  /// Generates all roots of `type` by closure from the simple roots.
  static RootSystem build(const CartanType& type);

  const CartanType& type() const noexcept { return type_; }
  int rank() const noexcept { return rank_; }
  bool irreducible() const noexcept { return type_.irreducible(); }
  const CartanMatrix& cartan() const noexcept { return cartan_; }

  /// Roots indexed 0..2N-1: positives first (by height, then coordinates);
  /// index N + i holds the negative of positive root i.
  std::size_t num_roots() const noexcept { return roots_.size(); }
  std::size_t num_positive() const noexcept { return roots_.size() / 2; }
  const RootVector& root(std::size_t i) const { return roots_.at(i); }
  const RootVector& coroot(std::size_t i) const { return coroots_.at(i); }
  const std::vector<RootVector>& roots() const noexcept { return roots_; }
  bool is_positive(std::size_t i) const noexcept { return i < num_positive(); }
  std::size_t negative_of(std::size_t i) const noexcept {
    return i < num_positive() ? i + num_positive() : i - num_positive();
  }
  /// Index of the simple root alpha_{i+1} (0-based i).
  std::size_t simple_root(int i) const { return static_cast<std::size_t>(i); }
  std::optional<std::size_t> find(const RootVector& coords) const;
  std::size_t index_of(const RootVector& coords) const;

  /// <root a, coroot b>.
  int pairing(std::size_t a, std::size_t b) const;
  /// Value of a root on an element of h given in simple-coroot coordinates
  /// (as integers), i.e. sum_jk m_j c_k C[k][j].
  std::vector<int> weight_coordinates(std::size_t root) const;

  /// Half the squared length of each simple root, normalized per factor so
  /// the shortest root has 1.
  const std::vector<int>& symmetrizer() const noexcept { return symmetrizer_; }
  int height(std::size_t i) const;

  /// Highest root (irreducible only).
  std::size_t highest_root() const;
  /// a_1..a_n; a_0 = 1 is implicit (irreducible only).
  std::vector<int> marks() const;
  std::vector<int> degrees() const { return toric::degrees(type_); }

 private:
  CartanType type_;
  int rank_ = 0;
  CartanMatrix cartan_;
  std::vector<int> symmetrizer_;
  std::vector<RootVector> roots_;
  std::vector<RootVector> coroots_;
  std::map<RootVector, std::size_t> index_;
};

struct DiagramEdge {
  int u;
  int v;
  /// max(|A[u][v]|, |A[v][u]|)
  int multiplicity;
  /// Vertex the arrow points to (the shorter root), or -1 when unoriented.
  int arrow_to;
};

/// Affine Dynkin diagram on vertices 0..n; vertex 0 is the lowest root.
struct AffineDiagram {
  /// Extended Cartan matrix A[i][j] = <alpha_j, alpha_i^vee>, i,j in 0..n.
  CartanMatrix extended_cartan;
  /// a_0..a_n with a_0 = 1.
  std::vector<int> marks;
  std::vector<DiagramEdge> edges;
  /// Root index of alpha_0 (= -highest root), alpha_1, ..., alpha_n.
  std::vector<std::size_t> vertex_roots;

  int num_vertices() const noexcept { return static_cast<int>(marks.size()); }
};

AffineDiagram affine_diagram(const RootSystem& phi);

/// Type of the finite system obtained by removing vertex p.
CartanType delete_vertex(const AffineDiagram& diagram, int p);

struct DiagramAutomorphisms {
  /// Vertex permutations (perm[v] = image of v), lexicographically sorted;
  /// the identity comes first.
  std::vector<std::vector<int>> automorphisms;
  /// Vertex orbits, each sorted, ordered by smallest member.
  std::vector<std::vector<int>> orbits;

  std::size_t stabilizer_order(int vertex) const;
  const std::vector<int>& orbit_of(int vertex) const;
};

DiagramAutomorphisms diagram_automorphisms(const AffineDiagram& diagram);

struct TypeInvariants {
  BigInt weyl_order;
  std::vector<int> degrees;
  BigInt exponent_product;
  /// |Z| as the index of the root lattice in the weight lattice.
  BigInt center_order;
};

TypeInvariants type_invariants(const CartanType& type);

}  // namespace toric
