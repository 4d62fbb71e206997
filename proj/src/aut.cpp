#include "zmcenter/aut.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "zmcenter/numtheory.hpp"

namespace zmcenter {

namespace {

// Inverse of a unit x modulo m (0 when m = 1).
u64 inverse_mod(u64 x, u64 m) {
  if (m == 1) return 0;
  long long old_r = static_cast<long long>(x % m), r = static_cast<long long>(m);
  long long old_s = 1, s = 0;
  while (r != 0) {
    const long long q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  if (old_r != 1) throw DomainError("not a unit");
  const long long mm = static_cast<long long>(m);
  return static_cast<u64>(((old_s % mm) + mm) % mm);
}

bool y_admissible(const ZmTriple& t, u64 y) {
  return y < t.n() && y % t.d() == 1 % t.d() && std::gcd(y, t.n()) == 1;
}

AutTriple from_generator_images(const ZmTriple& t, const ZmElement& image_a,
                                const ZmElement& image_b) {
  // image_a must lie in <a>; anything else means the map is not of the parametrized form.
  if (image_a.u != 0) throw std::logic_error("image of a left <a>");
  AutTriple out{image_a.v, image_b.v, image_b.u};
  if (!aut::is_valid(t, out))
    throw std::logic_error("composite " + to_string(out) + " is not a valid automorphism of " +
                           t.token());
  return out;
}

}  // namespace

std::string to_string(const AutTriple& a) {
  return "(" + std::to_string(a.x1) + "," + std::to_string(a.x2) + "," + std::to_string(a.y) + ")";
}

std::string to_string(AutFamily f) {
  switch (f) {
    case AutFamily::all: return "all";
    case AutFamily::central: return "central";
    case AutFamily::ia: return "ia";
    case AutFamily::inner: return "inner";
  }
  return "?";
}

AutFamily parse_family(const std::string& s) {
  if (s == "all") return AutFamily::all;
  if (s == "central") return AutFamily::central;
  if (s == "ia") return AutFamily::ia;
  if (s == "inner") return AutFamily::inner;
  throw DomainError("unknown automorphism family: " + s);
}

std::string to_string(Regime r) {
  return r == Regime::guaranteed ? "guaranteed" : "unguaranteed";
}

namespace aut {

AutTriple identity(const ZmTriple& t) { return {1 % t.m(), 0, 1 % t.n()}; }

bool is_valid(const ZmTriple& t, const AutTriple& a) {
  return a.x1 < t.m() && a.x2 < t.m() && std::gcd(a.x1, t.m()) == 1 && y_admissible(t, a.y);
}

AutTriple make(const ZmTriple& t, u64 x1, u64 x2, u64 y) {
  const std::string tag = to_string(AutTriple{x1, x2, y}) + " for " + t.token();
  if (x1 >= t.m() || x2 >= t.m()) throw DomainError(tag + ": x1, x2 must lie in [0, m)");
  if (std::gcd(x1, t.m()) != 1) throw DomainError(tag + ": gcd(x1, m) != 1");
  if (y >= t.n()) throw DomainError(tag + ": y must lie in [0, n)");
  if (y % t.d() != 1 % t.d()) throw DomainError(tag + ": y is not 1 mod d");
  if (std::gcd(y, t.n()) != 1) throw DomainError(tag + ": gcd(y, n) != 1, map is not bijective");
  return {x1, x2, y};
}

ZmElement apply(const ZmTriple& t, const AutTriple& a, const ZmElement& g) {
  const u64 m = t.m();
  return {nt::mulmod(a.y, g.u, t.n()),
          (nt::mulmod(a.x1, g.v, m) + nt::mulmod(a.x2, nt::geometric_sum_mod(t.r(), g.u, m), m)) % m};
}

AutTriple compose(const ZmTriple& t, const AutTriple& a, const AutTriple& b) {
  const auto image_a = apply(t, a, apply(t, b, zm::generator_a(t)));
  const auto image_b = apply(t, a, apply(t, b, zm::generator_b(t)));
  return from_generator_images(t, image_a, image_b);
}

AutTriple inverse(const ZmTriple& t, const AutTriple& a) {
  // Preimage of b is b^u a^v with y u = 1 (mod n) and x1 v + x2 [u]_r = 0 (mod m).
  const u64 m = t.m();
  const u64 x1_inv = inverse_mod(a.x1, m);
  const u64 u = inverse_mod(a.y, t.n());
  const u64 shift = nt::mulmod(a.x2, nt::geometric_sum_mod(t.r(), u, m), m);
  const u64 v = nt::mulmod((m - shift) % m, x1_inv, m);
  return from_generator_images(t, {0, x1_inv}, {u, v});
}

AutTriple conjugation(const ZmTriple& t, const ZmElement& h) {
  const auto h_inv = zm::inverse(t, h);
  auto conj = [&](const ZmElement& g) { return zm::multiply(t, zm::multiply(t, h_inv, g), h); };
  return from_generator_images(t, conj(zm::generator_a(t)), conj(zm::generator_b(t)));
}

std::vector<AutTriple> enumerate_family(const ZmTriple& t, AutFamily family) {
  const u64 m = t.m();
  const u64 n = t.n();
  std::vector<u64> units;
  for (u64 x = 0; x < m; ++x)
    if (std::gcd(x, m) == 1) units.push_back(x);
  std::vector<u64> ys;
  for (u64 y = 0; y < n; ++y)
    if (y_admissible(t, y)) ys.push_back(y);

  std::vector<AutTriple> out;
  switch (family) {
    case AutFamily::all:
      out.reserve(units.size() * m * ys.size());
      for (u64 x1 : units)
        for (u64 x2 = 0; x2 < m; ++x2)
          for (u64 y : ys) out.push_back({x1, x2, y});
      break;
    case AutFamily::central:
      for (u64 y : ys) out.push_back({1 % m, 0, y});
      break;
    case AutFamily::ia:
      for (u64 x1 : units)
        for (u64 x2 = 0; x2 < m; ++x2) out.push_back({x1, x2, 1 % n});
      break;
    case AutFamily::inner: {
      std::set<AutTriple> inner;
      for (const auto& h : zm::elements(t)) inner.insert(conjugation(t, h));
      out.assign(inner.begin(), inner.end());
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

AutCounts counts(const ZmTriple& t) {
  const u64 m = t.m(), n = t.n(), d = t.d(), phi = t.phi_m();
  const Regime y_regime = t.radical_condition() ? Regime::guaranteed : Regime::unguaranteed;
  return {
      .aut = {m * phi * (n / d), y_regime},
      .inn = {m * d, Regime::guaranteed},
      .out = {phi * (n / d) / d, y_regime},
      .central = {n / d, y_regime},
      .ia = {m * phi, Regime::guaranteed},
      .complete = phi == n && n == d,
  };
}

}  // namespace aut
}  // namespace zmcenter
