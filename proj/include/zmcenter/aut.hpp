#pragma once

// Automorphisms of ZM(m,n,r) in the parametrized form
//   b^u a^v  ->  b^(y u) a^(x1 v + x2 [u]_r).
// Beyond 0 <= x1, x2 < m, gcd(x1, m) = 1, 0 <= y < n and y = 1 (mod d) we
// also require gcd(y, n) = 1; without it the map is not onto whenever some
// prime divides n but not d.

#include <compare>
#include <string>
#include <vector>

#include "zmcenter/zm.hpp"

namespace zmcenter {

struct AutTriple {
  u64 x1 = 1;
  u64 x2 = 0;
  u64 y = 1;

  friend auto operator<=>(const AutTriple&, const AutTriple&) = default;
};

/// "(x1,x2,y)"
std::string to_string(const AutTriple& a);

enum class AutFamily { all, central, ia, inner };

std::string to_string(AutFamily f);
AutFamily parse_family(const std::string& s);

/// Whether a closed-form count is proven for the triple.
enum class Regime { guaranteed, unguaranteed };

std::string to_string(Regime r);

struct FormulaCount {
  u64 value;
  Regime regime;
};

struct AutCounts {
  FormulaCount aut;      // m phi(m) n / d
  FormulaCount inn;      // m d
  FormulaCount out;      // phi(m) n / d^2
  FormulaCount central;  // n / d
  FormulaCount ia;       // m phi(m)
  bool complete;         // phi(m) = n = d
};

namespace aut {

AutTriple identity(const ZmTriple& t);

bool is_valid(const ZmTriple& t, const AutTriple& a);

/// Throws DomainError naming the violated constraint.
AutTriple make(const ZmTriple& t, u64 x1, u64 x2, u64 y);

ZmElement apply(const ZmTriple& t, const AutTriple& a, const ZmElement& g);

/// The triple of g -> a(b(g)), read off the images of the generators a and b.
AutTriple compose(const ZmTriple& t, const AutTriple& a, const AutTriple& b);

AutTriple inverse(const ZmTriple& t, const AutTriple& a);

/// Conjugation g -> h^-1 g h as a triple.
AutTriple conjugation(const ZmTriple& t, const ZmElement& h);

/// Sorted, duplicate-free.
std::vector<AutTriple> enumerate_family(const ZmTriple& t, AutFamily family);

/// Closed-form counts; y-dependent counts are guaranteed only when every prime
/// of n divides d (and m > 1).
AutCounts counts(const ZmTriple& t);

}  // namespace aut
}  // namespace zmcenter
