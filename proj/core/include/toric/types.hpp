#pragma once

// Cartan–Killing type symbols, their standard tables, and identification of
// a finite-type Cartan matrix by its Dynkin diagram.

#include "toric/bigint.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

/// Square integer matrix with C[i][j] = <alpha_j, alpha_i^vee>.
using CartanMatrix = std::vector<std::vector<int>>;

class TypeSymbol {
 public:
  /// Validates the rank for the family and normalizes low-rank aliases
  /// (B1, C1 -> A1; C2 -> B2; D3 -> A3). Throws DomainError.
  TypeSymbol(char family, int rank);

  char family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  std::string str() const;

  friend auto operator<=>(const TypeSymbol&, const TypeSymbol&) = default;

 private:
  char family_;
  int rank_;
};

/// A product of irreducible types kept in canonical (sorted) order. The
/// empty product is the rank-0 system, printed "A0".
class CartanType {
 public:
  CartanType() = default;
  CartanType(std::vector<TypeSymbol> factors);  // NOLINT(google-explicit-constructor)
  CartanType(TypeSymbol single);                // NOLINT(google-explicit-constructor)

  /// Parses "F4", "A3xA1", "B2*G2". Throws DomainError on malformed input.
  static CartanType parse(std::string_view text);

  const std::vector<TypeSymbol>& factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }
  bool irreducible() const noexcept { return factors_.size() == 1; }
  int rank() const;
  std::string str() const;

  CartanType operator*(const CartanType& other) const;

  friend auto operator<=>(const CartanType&, const CartanType&) = default;

 private:
  std::vector<TypeSymbol> factors_;
};

/// Bourbaki-labelled Cartan matrix of an irreducible type.
CartanMatrix cartan_matrix(const TypeSymbol& t);
/// Block-diagonal Cartan matrix, factors in canonical order.
CartanMatrix cartan_matrix(const CartanType& t);

std::vector<int> degrees(const TypeSymbol& t);
/// Concatenated degrees of all factors (empty for rank 0).
std::vector<int> degrees(const CartanType& t);

/// Coefficient-free tables: |W| and the product of exponents (d_i - 1).
BigInt weyl_order(const CartanType& t);
BigInt exponent_product(const CartanType& t);

/// Identifies the type of a finite-type Cartan matrix. Each connected
/// component of its Dynkin graph is matched against the catalogue, with B/C
/// decided by whether the end vertex of the double bond is short (B) or
/// long (C). Throws DomainError for non-finite or malformed input.
CartanType identify_type(const CartanMatrix& cartan);

}  // namespace toric
