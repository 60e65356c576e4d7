#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace toric {

/// A torsion point of T = h / <coroots>, stored as numerators over a common
/// denominator in simple-coroot coordinates. Always reduced: numerators in
/// [0, denominator) and the denominator minimal.
class TorusPoint {
 public:
  /// The identity of T in rank n.
  explicit TorusPoint(int rank = 0);
  TorusPoint(std::vector<std::int64_t> numerators, std::int64_t denominator);

  int rank() const noexcept { return static_cast<int>(numerators_.size()); }
  std::int64_t denominator() const noexcept { return denominator_; }
  const std::vector<std::int64_t>& numerators() const noexcept { return numerators_; }
  /// Order of the point in T.
  std::int64_t order() const noexcept { return denominator_; }

  /// True when the character with the given weight coordinates (values on
  /// the simple coroots) is trivial at this point.
  bool character_trivial(const std::vector<int>& weight) const;

  /// Image under the linear map whose column k is the coroot-coordinate
  /// image of alpha_k^vee.
  TorusPoint transform(const std::vector<std::vector<int>>& columns) const;
  TorusPoint operator+(const TorusPoint& other) const;

  std::string str() const;

  /// Lexicographic order on the rational coordinates.
  std::strong_ordering operator<=>(const TorusPoint& other) const;
  bool operator==(const TorusPoint& other) const = default;

 private:
  void normalize();

  std::vector<std::int64_t> numerators_;
  std::int64_t denominator_ = 1;
};

}  // namespace toric
