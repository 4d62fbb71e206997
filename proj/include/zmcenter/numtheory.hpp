#pragma once

#include <cstdint>
#include <set>
#include <vector>

namespace zmcenter::nt {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

struct PrimePower {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, primes strictly increasing.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimePower> parts);

  const std::vector<PrimePower>& parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  std::size_t size() const noexcept { return parts_.size(); }
  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  /// Product of prime^exponent.
  u64 value() const;
  /// Product of the distinct primes.
  u64 radical() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> parts_;
};

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

/// Trial division; fine for the desk-scale inputs used here.
Factorization factorize(u64 n);

/// Returns the prime when `n` is q^a with a >= 1, otherwise 0.
u64 prime_power_base(u64 n);

u64 euler_phi(u64 m);
u64 radical(u64 n);

/// Least k >= 1 with r^k = 1 (mod m). Throws DomainError when gcd(r, m) != 1.
u64 multiplicative_order(u64 r, u64 m);

/// 1 + r + ... + r^(u-1) mod m, with the empty sum for u = 0. O(log u).
u64 geometric_sum_mod(u64 r, u64 u, u64 m);

inline constexpr u64 kDefaultPrimeBudget = 1'000'000;

/// Smallest prime p = 1 + t*q_pow (t >= 1) not in `exclusions`.
/// Throws BudgetExceeded once t passes `max_t`.
u64 find_prime_in_progression(u64 q_pow, const std::set<u64>& exclusions,
                              u64 max_t = kDefaultPrimeBudget);

/// Element of exact multiplicative order q_pow modulo the prime p; q_pow | p - 1.
/// Scans g = 2, 3, ... and returns the first g^((p-1)/q_pow) of full order.
u64 find_element_of_order(u64 p, u64 q_pow);

/// Sorted list of positive divisors.
std::vector<u64> divisors(u64 n);

}  // namespace zmcenter::nt
