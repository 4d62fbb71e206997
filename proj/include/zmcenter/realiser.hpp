#pragma once

// Constructive realisation of a cyclic group C_N as an absolute center.
//
// For N = q_1^a_1 ... q_k^a_k pick distinct primes p_i = 1 (mod q_i^a_i),
// outside {q_j}, and r_i of multiplicative order q_i^a_i modulo p_i. Then
// H = prod ZM(p_i, q_i^(2 a_i), r_i) has L(H) = C_N; for a divisor
// N1 = prod q_i^b_i the subgroup prod ZM(p_i, q_i^(a_i + b_i), r_i) has
// L = C_N1, and every subgroup of H has an absolute center embedding in C_N.

#include <optional>
#include <string>
#include <vector>

#include "zmcenter/cayley_group.hpp"
#include "zmcenter/numtheory.hpp"
#include "zmcenter/zm.hpp"

namespace zmcenter {

struct CertificateFactor {
  u64 q;
  unsigned alpha;
  u64 p;
  u64 r;

  u64 q_pow() const;
  /// ZM(p, q^(2 alpha), r)
  ZmTriple triple() const;

  friend bool operator==(const CertificateFactor&, const CertificateFactor&) = default;
};

struct RealiserCertificate {
  u64 N = 1;
  std::vector<CertificateFactor> factors;

  std::vector<ZmTriple> induced_triples() const;

  friend bool operator==(const RealiserCertificate&, const RealiserCertificate&) = default;
};

struct VerifyOptions {
  u64 oracle_bound = 2000;
  std::size_t subgroup_bound = gg::kDefaultSubgroupBound;
  std::size_t aut_bound = gg::kDefaultAutBound;
};

struct ForwardRow {
  u64 divisor;
  std::vector<ZmTriple> triples;
  std::vector<u64> formula_orders;
  /// Per factor; empty where the factor exceeds the oracle bound.
  std::vector<std::optional<u64>> oracle_orders;
  u64 formula_product;
  bool regime_guaranteed;  // every S_i satisfies rad(n) | d
  bool oracle_agrees;      // over the factors that were checked
  bool cyclic;             // every oracle L(S_i) is cyclic
  bool pass;

  /// "oracle", "partial" or "formula-only".
  std::string mode() const;
};

struct ConverseRow {
  std::size_t subgroup_order;
  std::size_t l_order;
  bool l_cyclic;
  bool divides;  // |L(T_i)| divides q_i^a_i
};

struct ConverseFactor {
  std::size_t factor_index;
  ZmTriple triple;
  u64 q_pow;
  std::optional<std::string> error;  // bound exceeded
  std::vector<ConverseRow> rows;
  bool pass;
};

struct ConverseReport {
  std::vector<ConverseFactor> factors;
  /// Product over factors of the lcm of |L(T_i)|; must divide N.
  u64 max_l_product;
  bool bound_exceeded;
  bool pass;
};

/// Direct scan of every subgroup T of the full product H.
struct ProductCheck {
  std::size_t group_order;
  std::size_t subgroup_count;
  bool all_split;  // every T is the product of its projections
  bool all_embed;  // every L(T) is cyclic of order dividing N
  bool pass;
};

struct VerificationReport {
  RealiserCertificate certificate;
  std::vector<ForwardRow> forward;
  bool forward_pass;
  std::optional<ConverseReport> converse;
  bool pass;
};

namespace realiser {

/// Throws DomainError describing the first violated certificate invariant.
void validate(const RealiserCertificate& cert);

RealiserCertificate realise(u64 N, u64 prime_budget = nt::kDefaultPrimeBudget);

/// S_i = ZM(p_i, q_i^(a_i + b_i), r_i) for N1 = prod q_i^b_i.
std::vector<ZmTriple> subgroup_for_divisor(const RealiserCertificate& cert, u64 N1);

std::vector<ForwardRow> verify_forward(const RealiserCertificate& cert,
                                       const VerifyOptions& opts = {});

ConverseReport verify_converse(const RealiserCertificate& cert, const VerifyOptions& opts = {});

/// Enumerates the subgroups of H itself; bounds must cover |H|.
ProductCheck verify_full_product(const RealiserCertificate& cert, const VerifyOptions& opts);

VerificationReport verify(const RealiserCertificate& cert, bool converse,
                          const VerifyOptions& opts = {});

}  // namespace realiser
}  // namespace zmcenter
