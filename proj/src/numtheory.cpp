#include "zmcenter/numtheory.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

#include "zmcenter/errors.hpp"

namespace zmcenter::nt {

Factorization::Factorization(std::vector<PrimePower> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].exponent == 0 || !is_prime(parts_[i].prime))
      throw DomainError("factorization entry is not a prime power");
    if (i > 0 && parts_[i - 1].prime >= parts_[i].prime)
      throw DomainError("factorization primes must be strictly increasing");
  }
}

u64 Factorization::value() const {
  u64 v = 1;
  for (const auto& [p, e] : parts_)
    for (unsigned i = 0; i < e; ++i) v *= p;
  return v;
}

u64 Factorization::radical() const {
  u64 v = 1;
  for (const auto& pp : parts_) v *= pp.prime;
  return v;
}

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  // The first twelve primes form a witness set that is complete below 3.3e24.
  static constexpr std::array<u64, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  const u64 n_minus_1 = n - 1;
  const int s = std::countr_zero(n_minus_1);
  const u64 odd = n_minus_1 >> s;
  for (u64 a : kWitnesses) {
    u64 x = powmod(a, odd, n);
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw DomainError("cannot factorize 0");
  std::vector<PrimePower> parts;
  auto strip = [&](u64 p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) parts.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (u64 p = 5; p <= n / p; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) parts.push_back({n, 1});
  return Factorization(std::move(parts));
}

u64 prime_power_base(u64 n) {
  if (n < 2) return 0;
  const auto f = factorize(n);
  return f.size() == 1 ? f.parts().front().prime : 0;
}

u64 euler_phi(u64 m) {
  if (m == 0) throw DomainError("euler_phi(0) is undefined");
  u64 phi = m;
  for (const auto& pp : factorize(m)) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

u64 radical(u64 n) { return factorize(n).radical(); }

u64 multiplicative_order(u64 r, u64 m) {
  if (m == 0) throw DomainError("modulus must be positive");
  if (m == 1) return 1;
  if (std::gcd(r, m) != 1)
    throw DomainError("multiplicative order undefined: gcd(" + std::to_string(r) + ", " +
                      std::to_string(m) + ") != 1");
  // The order divides phi(m); strip prime factors while the power stays 1.
  u64 order = euler_phi(m);
  for (const auto& [q, e] : factorize(order)) {
    for (unsigned i = 0; i < e && order % q == 0; ++i) {
      if (powmod(r, order / q, m) != 1) break;
      order /= q;
    }
  }
  return order;
}

u64 geometric_sum_mod(u64 r, u64 u, u64 m) {
  if (m == 0) throw DomainError("modulus must be positive");
  if (m == 1 || u == 0) return 0;
  r %= m;
  // Invariant: sum = [k]_r, power = r^k, consuming bits of u from the top.
  u64 sum = 0;
  u64 power = 1;
  for (int bit = std::bit_width(u) - 1; bit >= 0; --bit) {
    sum = mulmod(sum, (1 + power) % m, m);  // [2k] = [k](1 + r^k)
    power = mulmod(power, power, m);
    if ((u >> bit) & 1U) {
      sum = (mulmod(sum, r, m) + 1) % m;  // [k+1] = 1 + r[k]
      power = mulmod(power, r, m);
    }
  }
  return sum;
}

u64 find_prime_in_progression(u64 q_pow, const std::set<u64>& exclusions, u64 max_t) {
  if (prime_power_base(q_pow) == 0)
    throw DomainError("progression step " + std::to_string(q_pow) + " is not a prime power");
  for (u64 t = 1; t <= max_t; ++t) {
    if (t > (std::numeric_limits<u64>::max() - 1) / q_pow)
      throw BudgetExceeded("prime search overflowed 64 bits for step " + std::to_string(q_pow));
    const u64 p = 1 + t * q_pow;
    if (!exclusions.contains(p) && is_prime(p)) return p;
  }
  throw BudgetExceeded("no prime 1 + t*" + std::to_string(q_pow) + " with t <= " +
                       std::to_string(max_t));
}

u64 find_element_of_order(u64 p, u64 q_pow) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (q_pow == 0 || (p - 1) % q_pow != 0)
    throw DomainError(std::to_string(q_pow) + " does not divide " + std::to_string(p) + " - 1");
  if (q_pow == 1) return 1;
  const u64 q = prime_power_base(q_pow);
  if (q == 0) throw DomainError(std::to_string(q_pow) + " is not a prime power");
  const u64 cofactor = (p - 1) / q_pow;
  for (u64 g = 2; g < p; ++g) {
    const u64 r = powmod(g, cofactor, p);
    if (powmod(r, q_pow / q, p) != 1) return r;
  }
  throw Error("no element of order " + std::to_string(q_pow) + " modulo " + std::to_string(p));
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace zmcenter::nt
