#pragma once

// Absolute center L(G) = { g : alpha(g) = g for every automorphism alpha } of
// a ZM-group, by closed form (L = <b^(de)>, e least with n | d^2 e) and by a
// fixed-point scan over the parametrized automorphisms.

#include <optional>
#include <vector>

#include "zmcenter/zm.hpp"

namespace zmcenter {

struct AbsCenterResult {
  u64 e;
  ZmElement generator;  // b^(de)
  u64 order;            // n / gcd(de, n)
  bool regime_guaranteed;
  /// n | de(y-1) and m | x2 [de]_r rechecked over every enumerated
  /// automorphism; empty when the group exceeds the oracle bound.
  std::optional<bool> conditions_hold;
};

struct AbsCenterComparison {
  ZmTriple triple;
  u64 d;
  u64 e;
  u64 formula_order;
  ZmElement formula_generator;
  u64 center_order;
  std::optional<u64> oracle_order;
  std::optional<std::vector<ZmElement>> oracle_members;
  std::optional<u64> automorphisms_scanned;
  std::optional<bool> agree;
  bool regime_guaranteed;
};

namespace abscenter {

inline constexpr u64 kDefaultOracleBound = 2000;

/// n / gcd(n, d^2).
u64 exponent_e(const ZmTriple& t);

/// Throws DomainError for m = 1, where the closed form is not asserted.
AbsCenterResult formula(const ZmTriple& t, u64 oracle_bound = kDefaultOracleBound);

/// Members of <b^(de)> in u-major order.
std::vector<ZmElement> formula_members(const ZmTriple& t);

/// Exact fixed-point set of enumerate_family(all), u-major order.
/// Throws BoundExceeded when mn > bound.
std::vector<ZmElement> oracle(const ZmTriple& t, u64 bound = kDefaultOracleBound);

/// Both paths plus a verdict; the oracle part is skipped above the bound.
AbsCenterComparison compare(const ZmTriple& t, u64 oracle_bound = kDefaultOracleBound);

}  // namespace abscenter
}  // namespace zmcenter
