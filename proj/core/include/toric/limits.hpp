#pragma once

#include <cstdint>

namespace toric {

/// Computational bounds shared by every module. All fields are positive.
struct Limits {
  /// Largest Weyl group that may be enumerated element by element.
  std::uint64_t max_group_order = 60000;
  /// Largest rank accepted by the torsion-point grid scan.
  int brute_rank = 4;
  /// Largest rank accepted by the explicit layer poset builder.
  int poset_rank = 3;
  /// Largest rank for which complete subsystems are enumerated (any type).
  int enumeration_rank = 4;
  /// Type A_n is enumerable up to this rank regardless of enumeration_rank.
  int a_series_rank = 7;
  /// Opt-in enumeration of E6.
  bool allow_e6 = false;
};

}  // namespace toric
