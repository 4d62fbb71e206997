#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the library's arithmetic.

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline u64 order_by_scan(u64 r, u64 m) {
  if (m == 1) return 1;
  u64 x = r % m;
  for (u64 k = 1;; ++k) {
    if (x == 1) return k;
    x = x * r % m;
  }
}

inline u64 geometric_sum(u64 r, u64 u, u64 m) {
  u64 sum = 0, term = 1 % m;
  for (u64 j = 0; j < u; ++j) {
    sum = (sum + term) % m;
    term = term * (r % m) % m;
  }
  return sum;
}

inline u64 power_by_loop(u64 r, u64 k, u64 m) {
  u64 x = 1 % m;
  for (u64 i = 0; i < k; ++i) x = x * (r % m) % m;
  return x;
}

inline u64 phi_by_count(u64 m) {
  u64 c = 0;
  for (u64 x = 1; x <= m; ++x)
    if (std::gcd(x, m) == 1) ++c;
  return c;
}

inline bool prime_by_trial(u64 n) {
  if (n < 2) return false;
  for (u64 p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

inline std::map<u64, unsigned> factor_by_trial(u64 n) {
  std::map<u64, unsigned> out;
  for (u64 p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  if (n > 1) ++out[n];
  return out;
}

inline bool valid_triple(u64 m, u64 n, u64 r) {
  return std::gcd(m, n) == 1 && std::gcd(m, (r + m - 1) % m) == 1 &&
         power_by_loop(r, n, m) == 1 % m;
}

/// (b^u a^v)(b^s a^w) by pushing a^v past b one letter at a time using a b = b a^r.
inline std::pair<u64, u64> zm_multiply_by_rewriting(u64 m, u64 n, u64 r, std::pair<u64, u64> g,
                                                    std::pair<u64, u64> h) {
  u64 v = g.second;
  for (u64 i = 0; i < h.first; ++i) v = v * r % m;
  return {(g.first + h.first) % n, (v + h.second) % m};
}

/// All valid triples (m, n, r) with m > 1, r in [2, m) and m n <= bound.
inline std::vector<std::tuple<u64, u64, u64>> triples_up_to(u64 bound, bool include_cyclic = false) {
  std::vector<std::tuple<u64, u64, u64>> out;
  if (include_cyclic)
    for (u64 n = 1; n <= bound; ++n) out.emplace_back(1, n, 1);
  for (u64 m = 2; m <= bound; ++m)
    for (u64 n = 1; m * n <= bound; ++n)
      for (u64 r = 0; r < m; ++r)
        if (valid_triple(m, n, r)) out.emplace_back(m, n, r);
  return out;
}

inline u64 radical_by_trial(u64 n) {
  u64 rad = 1;
  for (const auto& [p, e] : factor_by_trial(n)) rad *= p;
  return rad;
}

}  // namespace oracle
