#include "zmcenter/abscenter.hpp"

#include <algorithm>
#include <numeric>

#include "zmcenter/aut.hpp"
#include "zmcenter/kernels.hpp"
#include "zmcenter/numtheory.hpp"

namespace zmcenter::abscenter {

u64 exponent_e(const ZmTriple& t) {
  const auto d_sq = static_cast<nt::u128>(t.d()) * t.d();
  return t.n() / static_cast<u64>(std::gcd(static_cast<nt::u128>(t.n()), d_sq));
}

AbsCenterResult formula(const ZmTriple& t, u64 oracle_bound) {
  if (t.m() == 1)
    throw DomainError(t.token() + ": closed form is not asserted for the cyclic case m = 1");
  const u64 n = t.n();
  const u64 e = exponent_e(t);
  const u64 de = static_cast<u64>(static_cast<nt::u128>(t.d()) * e % n);
  AbsCenterResult result{
      .e = e,
      .generator = {de, 0},
      .order = n / std::gcd(de, n),
      .regime_guaranteed = t.radical_condition(),
      .conditions_hold = std::nullopt,
  };
  if (t.order() <= oracle_bound) {
    const u64 full_de = t.d() * e;
    const u64 sum_de = nt::geometric_sum_mod(t.r(), full_de, t.m());
    bool ok = true;
    for (const auto& a : aut::enumerate_family(t, AutFamily::all)) {
      const u64 y_minus_1 = (a.y + n - 1) % n;
      ok = ok && nt::mulmod(full_de % n, y_minus_1, n) == 0 && nt::mulmod(a.x2, sum_de, t.m()) == 0;
    }
    result.conditions_hold = ok;
  }
  return result;
}

std::vector<ZmElement> formula_members(const ZmTriple& t) {
  const auto res = formula(t, 0);
  std::vector<ZmElement> out;
  for (u64 k = 0; k < res.order; ++k) out.push_back(zm::power(t, res.generator, k));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ZmElement> oracle(const ZmTriple& t, u64 bound) {
  if (t.order() > bound) throw BoundExceeded("absolute center oracle", t.order(), bound);
  const auto auts = aut::enumerate_family(t, AutFamily::all);
  return kernels::zm_fixed_points_parallel(t, auts);
}

AbsCenterComparison compare(const ZmTriple& t, u64 oracle_bound) {
  const auto f = formula(t, oracle_bound);
  AbsCenterComparison c{
      .triple = t,
      .d = t.d(),
      .e = f.e,
      .formula_order = f.order,
      .formula_generator = f.generator,
      .center_order = zm::center(t).order,
      .oracle_order = std::nullopt,
      .oracle_members = std::nullopt,
      .automorphisms_scanned = std::nullopt,
      .agree = std::nullopt,
      .regime_guaranteed = f.regime_guaranteed,
  };
  if (t.order() <= oracle_bound) {
    auto members = oracle(t, oracle_bound);
    c.oracle_order = members.size();
    c.automorphisms_scanned = aut::enumerate_family(t, AutFamily::all).size();
    c.agree = members == formula_members(t);
    c.oracle_members = std::move(members);
  }
  return c;
}

}  // namespace zmcenter::abscenter
