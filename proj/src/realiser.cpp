#include "zmcenter/realiser.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "zmcenter/abscenter.hpp"

namespace zmcenter {

namespace {

u64 ipow(u64 base, unsigned exp) {
  u64 v = 1;
  for (unsigned i = 0; i < exp; ++i) v *= base;
  return v;
}

unsigned valuation(u64 n, u64 q) {
  unsigned e = 0;
  while (n % q == 0) {
    n /= q;
    ++e;
  }
  return e;
}

}  // namespace

u64 CertificateFactor::q_pow() const { return ipow(q, alpha); }

ZmTriple CertificateFactor::triple() const { return ZmTriple::validate(p, ipow(q, 2 * alpha), r); }

std::vector<ZmTriple> RealiserCertificate::induced_triples() const {
  std::vector<ZmTriple> out;
  for (const auto& f : factors) out.push_back(f.triple());
  return out;
}

std::string ForwardRow::mode() const {
  const auto checked = std::count_if(oracle_orders.begin(), oracle_orders.end(),
                                     [](const auto& o) { return o.has_value(); });
  if (checked == static_cast<long>(oracle_orders.size())) return "oracle";
  return checked == 0 ? "formula-only" : "partial";
}

namespace realiser {

void validate(const RealiserCertificate& cert) {
  const std::string tag = "certificate for N = " + std::to_string(cert.N);
  if (cert.N == 0) throw DomainError(tag + ": N must be positive");
  const auto fact = nt::factorize(cert.N);
  if (fact.size() != cert.factors.size())
    throw DomainError(tag + ": factor count does not match the factorization of N");
  std::set<u64> qs, ps;
  for (std::size_t i = 0; i < cert.factors.size(); ++i) {
    const auto& f = cert.factors[i];
    if (f.q != fact.parts()[i].prime || f.alpha != fact.parts()[i].exponent)
      throw DomainError(tag + ": factor " + std::to_string(i) + " is not the prime power q_i^a_i");
    qs.insert(f.q);
  }
  for (const auto& f : cert.factors) {
    const u64 qa = f.q_pow();
    if (!nt::is_prime(f.p)) throw DomainError(tag + ": p = " + std::to_string(f.p) + " is not prime");
    if ((f.p - 1) % qa != 0)
      throw DomainError(tag + ": p = " + std::to_string(f.p) + " is not 1 mod " + std::to_string(qa));
    if (qs.contains(f.p)) throw DomainError(tag + ": p = " + std::to_string(f.p) + " is one of the q_j");
    if (!ps.insert(f.p).second)
      throw DomainError(tag + ": p = " + std::to_string(f.p) + " is used twice");
    if (f.r == 0 || f.r >= f.p || nt::multiplicative_order(f.r, f.p) != qa)
      throw DomainError(tag + ": r = " + std::to_string(f.r) + " does not have order " +
                        std::to_string(qa) + " mod " + std::to_string(f.p));
    f.triple();
  }
  const auto triples = cert.induced_triples();
  for (std::size_t i = 0; i < triples.size(); ++i)
    for (std::size_t j = i + 1; j < triples.size(); ++j)
      if (std::gcd(triples[i].order(), triples[j].order()) != 1)
        throw DomainError(tag + ": factor orders are not pairwise coprime");
}

RealiserCertificate realise(u64 N, u64 prime_budget) {
  if (N == 0) throw DomainError("N must be positive");
  RealiserCertificate cert{N, {}};
  const auto fact = nt::factorize(N);
  std::set<u64> exclusions;
  for (const auto& pp : fact) exclusions.insert(pp.prime);
  for (const auto& [q, alpha] : fact) {
    const u64 qa = ipow(q, alpha);
    const u64 p = nt::find_prime_in_progression(qa, exclusions, prime_budget);
    exclusions.insert(p);
    cert.factors.push_back({q, alpha, p, nt::find_element_of_order(p, qa)});
  }
  validate(cert);
  return cert;
}

std::vector<ZmTriple> subgroup_for_divisor(const RealiserCertificate& cert, u64 N1) {
  if (N1 == 0 || cert.N % N1 != 0)
    throw DomainError(std::to_string(N1) + " does not divide " + std::to_string(cert.N));
  std::vector<ZmTriple> out;
  for (const auto& f : cert.factors)
    out.push_back(ZmTriple::validate(f.p, ipow(f.q, f.alpha + valuation(N1, f.q)), f.r));
  return out;
}

std::vector<ForwardRow> verify_forward(const RealiserCertificate& cert, const VerifyOptions& opts) {
  std::vector<ForwardRow> rows;
  for (u64 divisor : nt::divisors(cert.N)) {
    ForwardRow row{divisor, subgroup_for_divisor(cert, divisor), {}, {}, 1, true, true, true, false};
    for (const auto& t : row.triples) {
      const auto f = abscenter::formula(t, 0);
      row.formula_orders.push_back(f.order);
      row.formula_product *= f.order;
      row.regime_guaranteed = row.regime_guaranteed && f.regime_guaranteed;
      if (t.order() <= opts.oracle_bound) {
        const auto members = abscenter::oracle(t, opts.oracle_bound);
        row.oracle_orders.emplace_back(members.size());
        row.oracle_agrees = row.oracle_agrees && members == abscenter::formula_members(t);
        row.cyclic = row.cyclic && std::any_of(members.begin(), members.end(), [&](const auto& g) {
                       return zm::element_order(t, g) == members.size();
                     });
      } else {
        row.oracle_orders.emplace_back(std::nullopt);
      }
    }
    row.pass = row.formula_product == divisor && row.regime_guaranteed && row.oracle_agrees &&
               row.cyclic;
    rows.push_back(std::move(row));
  }
  return rows;
}

ConverseReport verify_converse(const RealiserCertificate& cert, const VerifyOptions& opts) {
  ConverseReport report{{}, 1, false, true};
  for (std::size_t i = 0; i < cert.factors.size(); ++i) {
    const auto& f = cert.factors[i];
    ConverseFactor cf{i, f.triple(), f.q_pow(), std::nullopt, {}, true};
    u64 l_lcm = 1;
    try {
      if (cf.triple.order() > opts.subgroup_bound)
        throw BoundExceeded("subgroup enumeration", cf.triple.order(), opts.subgroup_bound);
      const auto group = zm::cayley(cf.triple, cf.triple.order());
      for (const auto& sub : gg::subgroups(group, opts.subgroup_bound)) {
        const auto induced = gg::induced_group(sub);
        const auto l = gg::absolute_center_bruteforce(induced, opts.aut_bound);
        const auto cyc = gg::is_cyclic(l);
        ConverseRow row{sub.order(), l.order(), cyc.cyclic, cf.q_pow % l.order() == 0};
        cf.pass = cf.pass && row.l_cyclic && row.divides;
        l_lcm = std::lcm(l_lcm, static_cast<u64>(l.order()));
        cf.rows.push_back(row);
      }
    } catch (const BoundExceeded& ex) {
      cf.error = ex.what();
      cf.pass = false;
      report.bound_exceeded = true;
    }
    report.max_l_product *= l_lcm;
    report.pass = report.pass && cf.pass;
    report.factors.push_back(std::move(cf));
  }
  report.pass = report.pass && cert.N % report.max_l_product == 0;
  return report;
}

ProductCheck verify_full_product(const RealiserCertificate& cert, const VerifyOptions& opts) {
  std::vector<CayleyGroup> factors;
  for (const auto& t : cert.induced_triples()) factors.push_back(zm::cayley(t, opts.subgroup_bound));
  const CayleyGroup h =
      factors.empty() ? CayleyGroup::cyclic(1) : gg::direct_product(factors, opts.subgroup_bound);

  ProductCheck check{h.order(), 0, true, true, false};
  const auto subs = gg::subgroups(h, opts.subgroup_bound);
  check.subgroup_count = subs.size();
  for (const auto& sub : subs) {
    std::vector<std::set<Index>> projections(factors.size());
    for (Index x : sub.members()) {
      std::size_t rest = x;
      for (std::size_t k = factors.size(); k-- > 0;) {
        projections[k].insert(static_cast<Index>(rest % factors[k].order()));
        rest /= factors[k].order();
      }
    }
    std::size_t product = 1;
    for (const auto& proj : projections) product *= proj.size();
    check.all_split = check.all_split && product == sub.order();

    const auto t = gg::induced_group(sub);
    const auto l = gg::absolute_center_bruteforce(t, opts.aut_bound);
    check.all_embed = check.all_embed && gg::is_cyclic(l).cyclic && cert.N % l.order() == 0;
  }
  check.pass = check.all_split && check.all_embed;
  return check;
}

VerificationReport verify(const RealiserCertificate& cert, bool converse, const VerifyOptions& opts) {
  validate(cert);
  VerificationReport report{cert, verify_forward(cert, opts), true, std::nullopt, false};
  report.forward_pass = std::all_of(report.forward.begin(), report.forward.end(),
                                    [](const ForwardRow& r) { return r.pass; });
  if (converse) report.converse = verify_converse(cert, opts);
  report.pass = report.forward_pass && (!report.converse || report.converse->pass);
  return report;
}

}  // namespace realiser
}  // namespace zmcenter
