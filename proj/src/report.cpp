#include "zmcenter/report.hpp"

#include <ostream>

namespace zmcenter::report {

namespace {

json count_json(const FormulaCount& c) {
  return {{"value", c.value}, {"regime", to_string(c.regime)}};
}

std::string verdict(const AbsCenterComparison& c) {
  if (!c.agree) return "formula-only";
  return *c.agree ? "agree" : "disagree";
}

std::string power_of_b(const ZmElement& g) { return "<b^" + std::to_string(g.u) + ">"; }

}  // namespace

json to_json(const ZmTriple& t) { return {{"m", t.m()}, {"n", t.n()}, {"r", t.r()}}; }

json to_json(const ZmElement& g) { return {{"u", g.u}, {"v", g.v}}; }

json to_json(const AutTriple& a) { return {{"x1", a.x1}, {"x2", a.x2}, {"y", a.y}}; }

json to_json(const AutCounts& c) {
  return {{"aut", count_json(c.aut)},         {"inn", count_json(c.inn)},
          {"out", count_json(c.out)},         {"central", count_json(c.central)},
          {"ia", count_json(c.ia)},           {"complete", c.complete}};
}

json to_json(const AbsCenterComparison& c) {
  json doc = {
      {"schema", kSchemaVersion},
      {"triple", to_json(c.triple)},
      {"d", c.d},
      {"e", c.e},
      {"formula_order", c.formula_order},
      {"formula_generator", to_json(c.formula_generator)},
      {"center_order", c.center_order},
      {"regime_guaranteed", c.regime_guaranteed},
      {"verdict", verdict(c)},
  };
  if (c.oracle_order) doc["oracle_order"] = *c.oracle_order;
  if (c.agree) doc["agree"] = *c.agree;
  if (c.automorphisms_scanned) doc["automorphisms_scanned"] = *c.automorphisms_scanned;
  if (c.oracle_members) {
    json members = json::array();
    for (const auto& g : *c.oracle_members) members.push_back(to_json(g));
    doc["oracle_members"] = std::move(members);
  }
  return doc;
}

json to_json(const RealiserCertificate& cert) {
  json factors = json::array();
  for (const auto& f : cert.factors)
    factors.push_back({{"q", f.q}, {"alpha", f.alpha}, {"p", f.p}, {"r", f.r}});
  return {{"schema", kSchemaVersion}, {"N", cert.N}, {"factors", std::move(factors)}};
}

json to_json(const VerificationReport& r) {
  json forward = json::array();
  for (const auto& row : r.forward) {
    json triples = json::array();
    for (const auto& t : row.triples) triples.push_back(to_json(t));
    json oracle = json::array();
    for (const auto& o : row.oracle_orders) oracle.push_back(o ? json(*o) : json(nullptr));
    forward.push_back({{"divisor", row.divisor},
                       {"triples", std::move(triples)},
                       {"formula_orders", row.formula_orders},
                       {"oracle_orders", std::move(oracle)},
                       {"formula_product", row.formula_product},
                       {"regime_guaranteed", row.regime_guaranteed},
                       {"oracle_agrees", row.oracle_agrees},
                       {"cyclic", row.cyclic},
                       {"mode", row.mode()},
                       {"pass", row.pass}});
  }
  json doc = {{"schema", kSchemaVersion},
              {"certificate", to_json(r.certificate)},
              {"forward", std::move(forward)},
              {"forward_pass", r.forward_pass},
              {"pass", r.pass}};
  if (r.converse) {
    json factors = json::array();
    for (const auto& f : r.converse->factors) {
      json rows = json::array();
      for (const auto& row : f.rows)
        rows.push_back({{"subgroup_order", row.subgroup_order},
                        {"l_order", row.l_order},
                        {"l_cyclic", row.l_cyclic},
                        {"divides", row.divides}});
      json entry = {{"factor_index", f.factor_index},
                    {"triple", to_json(f.triple)},
                    {"q_pow", f.q_pow},
                    {"subgroup_count", f.rows.size()},
                    {"rows", std::move(rows)},
                    {"pass", f.pass}};
      if (f.error) entry["error"] = *f.error;
      factors.push_back(std::move(entry));
    }
    doc["converse"] = {{"factors", std::move(factors)},
                       {"max_l_product", r.converse->max_l_product},
                       {"bound_exceeded", r.converse->bound_exceeded},
                       {"pass", r.converse->pass}};
  }
  return doc;
}

json to_json(const ProductCheck& p) {
  return {{"group_order", p.group_order}, {"subgroup_count", p.subgroup_count},
          {"all_split", p.all_split},     {"all_embed", p.all_embed},
          {"pass", p.pass}};
}

RealiserCertificate certificate_from_json(const json& doc) {
  try {
    if (doc.at("schema").get<int>() != kSchemaVersion)
      throw DomainError("unsupported certificate schema");
    RealiserCertificate cert;
    cert.N = doc.at("N").get<u64>();
    for (const auto& f : doc.at("factors"))
      cert.factors.push_back({f.at("q").get<u64>(), f.at("alpha").get<unsigned>(),
                              f.at("p").get<u64>(), f.at("r").get<u64>()});
    realiser::validate(cert);
    return cert;
  } catch (const json::exception& ex) {
    throw DomainError(std::string("malformed certificate: ") + ex.what());
  }
}

void print_comparison(std::ostream& os, const AbsCenterComparison& c) {
  const auto& t = c.triple;
  os << t.token() << "  |G| = " << t.order() << '\n'
     << "d = " << c.d << ", e = " << c.e << '\n'
     << "Z = <b^" << t.d() % t.n() << ">  order " << c.center_order << '\n'
     << "L = " << power_of_b(c.formula_generator) << "  order " << c.formula_order
     << "  (formula, regime " << (c.regime_guaranteed ? "guaranteed" : "unguaranteed") << ")\n";
  if (c.oracle_order) {
    os << "oracle: order " << *c.oracle_order << " over " << *c.automorphisms_scanned
       << " automorphisms\n";
  } else {
    os << "oracle: skipped (group above oracle bound)\n";
  }
  os << "L = Z: " << (c.formula_order == c.center_order ? "yes" : "no") << '\n'
     << "verdict: " << verdict(c) << '\n';
}

void print_certificate(std::ostream& os, const RealiserCertificate& cert) {
  os << "N = " << cert.N << '\n';
  if (cert.factors.empty()) {
    os << "H = trivial group, L(H) = 1\n";
    return;
  }
  for (const auto& f : cert.factors)
    os << "  q = " << f.q << ", alpha = " << f.alpha << ", p = " << f.p << ", r = " << f.r
       << "  H_i = " << f.triple().token() << '\n';
  u64 order = 1;
  for (const auto& t : cert.induced_triples()) order *= t.order();
  os << "|H| = " << order << ", L(H) = C_" << cert.N << '\n';
}

void print_report(std::ostream& os, const VerificationReport& r) {
  print_certificate(os, r.certificate);
  os << "forward:\n";
  for (const auto& row : r.forward) {
    os << "  N1 = " << row.divisor << "  S =";
    for (const auto& t : row.triples) os << ' ' << t.token();
    os << "  |L(S)| = " << row.formula_product << "  [" << row.mode() << "]  "
       << (row.pass ? "pass" : "FAIL") << '\n';
  }
  if (r.converse) {
    os << "converse:\n";
    for (const auto& f : r.converse->factors) {
      os << "  H_" << f.factor_index + 1 << " = " << f.triple.token() << ": ";
      if (f.error) {
        os << *f.error << '\n';
        continue;
      }
      std::size_t max_l = 1;
      for (const auto& row : f.rows) max_l = std::max(max_l, row.l_order);
      os << f.rows.size() << " subgroups, max |L(T)| = " << max_l << " | " << f.q_pow << "  "
         << (f.pass ? "pass" : "FAIL") << '\n';
    }
  }
  os << "overall: " << (r.pass ? "pass" : "FAIL") << '\n';
}

}  // namespace zmcenter::report
