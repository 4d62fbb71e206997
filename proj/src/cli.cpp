#include "zmcenter/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>

#include "zmcenter/abscenter.hpp"
#include "zmcenter/aut.hpp"
#include "zmcenter/cayley_group.hpp"
#include "zmcenter/realiser.hpp"
#include "zmcenter/report.hpp"

namespace zmcenter::cli {

namespace {

using report::json;

struct Options {
  u64 m = 0, n = 0, r = 0, N = 0;
  std::string family = "all";
  bool count_only = false;
  bool json_out = false;
  bool converse = false;
  u64 oracle_bound = abscenter::kDefaultOracleBound;
  std::size_t aut_bound = gg::kDefaultAutBound;
  std::size_t subgroup_bound = gg::kDefaultSubgroupBound;
  u64 prime_budget = nt::kDefaultPrimeBudget;
};

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

void add_triple(CLI::App* cmd, Options& o) {
  cmd->add_option("m", o.m, "order of <a>")->required()->check(CLI::PositiveNumber);
  cmd->add_option("n", o.n, "order of b")->required()->check(CLI::PositiveNumber);
  cmd->add_option("r", o.r, "action exponent, b^-1 a b = a^r")->required()->check(CLI::PositiveNumber);
}

int cmd_abscenter(const Options& o, std::ostream& out) {
  const auto t = ZmTriple::validate(o.m, o.n, o.r);
  const auto cmp = abscenter::compare(t, o.oracle_bound);
  if (o.json_out)
    emit(out, report::to_json(cmp));
  else
    report::print_comparison(out, cmp);
  return cmp.agree.value_or(true) ? kOk : kVerificationFailed;
}

int cmd_aut(const Options& o, std::ostream& out) {
  const auto t = ZmTriple::validate(o.m, o.n, o.r);
  const auto family = parse_family(o.family);
  const auto counts = aut::counts(t);
  const auto triples = aut::enumerate_family(t, family);
  if (o.json_out) {
    json doc = {{"schema", report::kSchemaVersion},
                {"triple", report::to_json(t)},
                {"d", t.d()},
                {"family", o.family},
                {"counts", report::to_json(counts)},
                {"enumerated", triples.size()}};
    if (!o.count_only) {
      json list = json::array();
      for (const auto& a : triples) list.push_back(report::to_json(a));
      doc["automorphisms"] = std::move(list);
    }
    emit(out, doc);
    return kOk;
  }
  auto line = [&](const char* name, const FormulaCount& c) {
    out << "  " << name << " = " << c.value << "  (" << to_string(c.regime) << ")\n";
  };
  out << t.token() << "  d = " << t.d() << ", phi(m) = " << t.phi_m() << '\n' << "formula:\n";
  line("|Aut|    ", counts.aut);
  line("|Inn|    ", counts.inn);
  line("|Out|    ", counts.out);
  line("|Aut_C|  ", counts.central);
  line("|Aut_IA| ", counts.ia);
  out << "  complete = " << (counts.complete ? "yes" : "no") << '\n'
      << "enumerated " << o.family << ": " << triples.size() << '\n';
  if (!o.count_only)
    for (const auto& a : triples) out << "  " << to_string(a) << '\n';
  return kOk;
}

int cmd_realise(const Options& o, std::ostream& out) {
  const auto cert = realiser::realise(o.N, o.prime_budget);
  if (o.json_out)
    emit(out, report::to_json(cert));
  else
    report::print_certificate(out, cert);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto cert = realiser::realise(o.N, o.prime_budget);
  const VerifyOptions vo{o.oracle_bound, o.subgroup_bound, o.aut_bound};
  const auto rep = realiser::verify(cert, o.converse, vo);
  if (o.json_out)
    emit(out, report::to_json(rep));
  else
    report::print_report(out, rep);
  if (rep.pass) return kOk;
  return rep.converse && rep.converse->bound_exceeded ? kBoundExceeded : kVerificationFailed;
}

int cmd_oracle_check(const Options& o, std::ostream& out) {
  const auto t = ZmTriple::validate(o.m, o.n, o.r);
  if (t.order() > o.oracle_bound) throw BoundExceeded("absolute center oracle", t.order(), o.oracle_bound);
  const auto cmp = abscenter::compare(t, o.oracle_bound);
  json doc = report::to_json(cmp);
  doc["enumerated_automorphisms"] = *cmp.automorphisms_scanned;
  doc["formula_automorphisms"] = aut::counts(t).aut.value;

  // Independent check on the explicit table when it is small enough.
  std::optional<bool> generic_agrees;
  if (t.order() <= o.aut_bound) {
    const auto table = zm::cayley(t, t.order());
    const auto auts = gg::automorphisms_bruteforce(table, o.aut_bound);
    const auto l = gg::absolute_center_bruteforce(table, o.aut_bound);
    std::vector<Index> oracle_idx;
    for (const auto& g : *cmp.oracle_members) oracle_idx.push_back(static_cast<Index>(zm::index_of(t, g)));
    generic_agrees = oracle_idx == l.members();
    doc["bruteforce_automorphisms"] = auts.size();
    doc["bruteforce_order"] = l.order();
    doc["bruteforce_agrees_with_oracle"] = *generic_agrees;
  }
  if (o.json_out) {
    emit(out, doc);
  } else {
    report::print_comparison(out, cmp);
    out << "automorphisms: formula " << doc["formula_automorphisms"] << ", enumerated "
        << *cmp.automorphisms_scanned;
    if (generic_agrees)
      out << ", brute force " << doc["bruteforce_automorphisms"] << "\nbrute-force L order "
          << doc["bruteforce_order"] << (*generic_agrees ? " (matches oracle)" : " (DIFFERS from oracle)");
    out << '\n';
  }
  const bool ok = *cmp.agree && generic_agrees.value_or(true);
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Absolute centers of ZM-groups and realisation of cyclic groups", "zmcenter"};
  app.require_subcommand(1);

  auto bounds = [&](CLI::App* cmd) {
    cmd->add_option("--oracle-bound", o.oracle_bound, "max |G| for the fixed-point oracle")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--aut-bound", o.aut_bound, "max order for brute-force automorphism search")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--subgroup-bound", o.subgroup_bound, "max order for subgroup enumeration")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--prime-budget", o.prime_budget, "max t in the prime search 1 + t q^a")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--json", o.json_out, "emit JSON");
  };

  auto* abs = app.add_subcommand("abscenter", "absolute center by formula and oracle");
  add_triple(abs, o);
  bounds(abs);

  auto* aut_cmd = app.add_subcommand("aut", "automorphism counts and enumeration");
  add_triple(aut_cmd, o);
  aut_cmd->add_option("--family", o.family, "all | central | ia | inner")
      ->check(CLI::IsMember({"all", "central", "ia", "inner"}));
  aut_cmd->add_flag("--count-only", o.count_only, "omit the list of triples");
  bounds(aut_cmd);

  auto* real = app.add_subcommand("realise", "certificate H with L(H) = C_N");
  real->add_option("N", o.N, "order of the cyclic group")->required()->check(CLI::PositiveNumber);
  bounds(real);

  auto* ver = app.add_subcommand("verify", "check a certificate against every subgroup of C_N");
  ver->add_option("N", o.N, "order of the cyclic group")->required()->check(CLI::PositiveNumber);
  ver->add_flag("--converse", o.converse, "also scan every subgroup of each factor");
  bounds(ver);

  auto* check = app.add_subcommand("oracle-check", "formula against brute force, exit 1 on mismatch");
  add_triple(check, o);
  bounds(check);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (abs->parsed()) return cmd_abscenter(o, out);
    if (aut_cmd->parsed()) return cmd_aut(o, out);
    if (real->parsed()) return cmd_realise(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
    if (check->parsed()) return cmd_oracle_check(o, out);
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBoundExceeded;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBoundExceeded;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace zmcenter::cli
