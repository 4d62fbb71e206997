#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "zmcenter/errors.hpp"

namespace zmcenter {

class CayleyGroup;

using u64 = std::uint64_t;

/// Normal form b^u a^v of an element of ZM(m,n,r).
struct ZmElement {
  u64 u = 0;  // exponent of b, mod n
  u64 v = 0;  // exponent of a, mod m

  friend auto operator<=>(const ZmElement&, const ZmElement&) = default;
};

std::string to_string(const ZmElement& g);

/// Why a triple was rejected by ZmTriple::validate.
enum class TripleError {
  non_positive,
  m_n_not_coprime,   // gcd(m, n) != 1
  m_r1_not_coprime,  // gcd(m, r - 1) != 1
  r_pow_n_not_one,   // r^n != 1 (mod m)
};

/// A validated presentation <a, b | a^m = b^n = 1, b^-1 a b = a^r> with r
/// reduced mod m. m = 1 is admitted and presents the cyclic group C_n.
class ZmTriple {
 public:
  static ZmTriple validate(u64 m, u64 n, u64 r);

  u64 m() const noexcept { return m_; }
  u64 n() const noexcept { return n_; }
  u64 r() const noexcept { return r_; }
  /// Multiplicative order of r modulo m.
  u64 d() const noexcept { return d_; }
  u64 phi_m() const noexcept { return phi_m_; }
  u64 order() const noexcept { return m_ * n_; }

  /// Every prime dividing n also divides d.
  bool radical_condition() const;

  /// "ZM(m,n,r)"
  std::string token() const;

  friend bool operator==(const ZmTriple& a, const ZmTriple& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.r_ == b.r_;
  }

 private:
  ZmTriple(u64 m, u64 n, u64 r, u64 d, u64 phi_m) : m_(m), n_(n), r_(r), d_(d), phi_m_(phi_m) {}

  u64 m_, n_, r_, d_, phi_m_;
};

class InvalidTriple : public DomainError {
 public:
  InvalidTriple(TripleError reason, const std::string& msg)
      : DomainError(msg), reason_(reason) {}
  TripleError reason() const noexcept { return reason_; }

 private:
  TripleError reason_;
};

/// Parses "ZM(m,n,r)" (whitespace tolerated) and validates it.
ZmTriple parse_triple(const std::string& token);

namespace zm {

inline ZmElement identity() { return {0, 0}; }
inline ZmElement generator_a(const ZmTriple& t) { return {0, 1 % t.m()}; }
inline ZmElement generator_b(const ZmTriple& t) { return {1 % t.n(), 0}; }

bool contains(const ZmTriple& t, const ZmElement& g);

/// (b^u a^v)(b^s a^w) = b^(u+s) a^(v r^s + w)
ZmElement multiply(const ZmTriple& t, const ZmElement& g, const ZmElement& h);

/// (b^s a^w)^k = b^(sk) a^(w [k]_{r^s})
ZmElement power(const ZmTriple& t, const ZmElement& g, u64 k);

ZmElement inverse(const ZmTriple& t, const ZmElement& g);

u64 element_order(const ZmTriple& t, const ZmElement& g);

struct CyclicSubgroup {
  ZmElement generator;
  u64 order;
};

/// Z = <b^d>, of order n/d.
CyclicSubgroup center(const ZmTriple& t);

/// G' = <a>, of order m.
CyclicSubgroup derived_subgroup(const ZmTriple& t);

/// All mn elements, u-major then v.
std::vector<ZmElement> elements(const ZmTriple& t);

/// Position of g in elements(t).
inline std::size_t index_of(const ZmTriple& t, const ZmElement& g) {
  return static_cast<std::size_t>(g.u * t.m() + g.v);
}

inline constexpr u64 kDefaultTableBound = 2000;

/// Explicit multiplication table in the elements(t) enumeration order.
CayleyGroup cayley(const ZmTriple& t, u64 bound = kDefaultTableBound);

}  // namespace zm
}  // namespace zmcenter
