#include "zmcenter/zm.hpp"

#include <numeric>
#include <regex>

#include "zmcenter/cayley_group.hpp"
#include "zmcenter/numtheory.hpp"

namespace zmcenter {

std::string to_string(const ZmElement& g) {
  return "b^" + std::to_string(g.u) + " a^" + std::to_string(g.v);
}

ZmTriple ZmTriple::validate(u64 m, u64 n, u64 r) {
  const std::string tok =
      "ZM(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(r) + ")";
  if (m == 0 || n == 0 || r == 0)
    throw InvalidTriple(TripleError::non_positive, tok + ": m, n, r must be positive");
  if (std::gcd(m, n) != 1)
    throw InvalidTriple(TripleError::m_n_not_coprime,
                        tok + ": gcd(m,n) = " + std::to_string(std::gcd(m, n)) + " != 1");
  const u64 r_mod = r % m;
  const u64 r_minus_1 = (r_mod + m - 1) % m;
  if (std::gcd(m, r_minus_1) != 1)
    throw InvalidTriple(TripleError::m_r1_not_coprime,
                        tok + ": gcd(m,r-1) = " + std::to_string(std::gcd(m, r_minus_1)) + " != 1");
  if (nt::powmod(r_mod, n, m) != 1 % m)
    throw InvalidTriple(TripleError::r_pow_n_not_one, tok + ": r^n is not 1 mod m");
  if (m == 1) return ZmTriple(1, n, 1, 1, 1);
  return ZmTriple(m, n, r_mod, nt::multiplicative_order(r_mod, m), nt::euler_phi(m));
}

bool ZmTriple::radical_condition() const { return d_ % nt::radical(n_) == 0; }

std::string ZmTriple::token() const {
  return "ZM(" + std::to_string(m_) + "," + std::to_string(n_) + "," + std::to_string(r_) + ")";
}

ZmTriple parse_triple(const std::string& token) {
  static const std::regex re(R"(\s*ZM\s*\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
  std::smatch match;
  if (!std::regex_match(token, match, re)) throw DomainError("not a ZM(m,n,r) token: " + token);
  return ZmTriple::validate(std::stoull(match[1]), std::stoull(match[2]), std::stoull(match[3]));
}

namespace zm {

bool contains(const ZmTriple& t, const ZmElement& g) { return g.u < t.n() && g.v < t.m(); }

ZmElement multiply(const ZmTriple& t, const ZmElement& g, const ZmElement& h) {
  const u64 m = t.m();
  return {(g.u + h.u) % t.n(), (nt::mulmod(g.v, nt::powmod(t.r(), h.u, m), m) + h.v) % m};
}

ZmElement power(const ZmTriple& t, const ZmElement& g, u64 k) {
  const u64 m = t.m();
  const u64 r_s = nt::powmod(t.r(), g.u, m);
  return {nt::mulmod(g.u, k % t.n(), t.n()),
          nt::mulmod(g.v, nt::geometric_sum_mod(r_s, k, m), m)};
}

ZmElement inverse(const ZmTriple& t, const ZmElement& g) {
  // (b^s a^w)^-1 = a^-w b^-s = b^-s a^(-w r^-s), and r^-s = r^(n-s).
  const u64 m = t.m();
  const u64 s_inv = (t.n() - g.u) % t.n();
  const u64 w = nt::mulmod(g.v, nt::powmod(t.r(), s_inv, m), m);
  return {s_inv, (m - w) % m};
}

u64 element_order(const ZmTriple& t, const ZmElement& g) {
  // g^k0 lies in <a> once k0 kills the b-part; finish with the order of that power.
  const u64 k0 = t.n() / std::gcd(g.u, t.n());
  const ZmElement h = power(t, g, k0);
  return k0 * (t.m() / std::gcd(h.v, t.m()));
}

CyclicSubgroup center(const ZmTriple& t) { return {{t.d() % t.n(), 0}, t.n() / t.d()}; }

CyclicSubgroup derived_subgroup(const ZmTriple& t) { return {generator_a(t), t.m()}; }

std::vector<ZmElement> elements(const ZmTriple& t) {
  std::vector<ZmElement> out;
  out.reserve(t.order());
  for (u64 u = 0; u < t.n(); ++u)
    for (u64 v = 0; v < t.m(); ++v) out.push_back({u, v});
  return out;
}

CayleyGroup cayley(const ZmTriple& t, u64 bound) {
  if (t.order() > bound) throw BoundExceeded("Cayley table", t.order(), bound);
  const auto elems = elements(t);
  const std::size_t order = elems.size();
  std::vector<Index> table(order * order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j)
      table[i * order + j] = static_cast<Index>(index_of(t, multiply(t, elems[i], elems[j])));
  std::vector<std::string> labels;
  labels.reserve(order);
  for (const auto& g : elems) labels.push_back("(" + std::to_string(g.u) + "," + std::to_string(g.v) + ")");
  return CayleyGroup(order, std::move(table), std::move(labels));
}

}  // namespace zm
}  // namespace zmcenter
