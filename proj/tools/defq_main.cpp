// defq: command-line front end.
//
// Exit codes: 0 success or expected verdict, 1 negative verdict (invalid
// algebra, not Poisson, --expect mismatch), 2 usage or input error,
// 3 internal invariant breach.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "defq/algebra_io.hpp"
#include "defq/cohomology.hpp"
#include "defq/enveloping.hpp"
#include "defq/lie_algebra.hpp"
#include "defq/multivector.hpp"
#include "defq/multivector_text.hpp"
#include "defq/report_json.hpp"
#include "defq/rigidity.hpp"
#include "selftest.hpp"

namespace {

using nlohmann::json;
using namespace defq;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct RunConfig {
  std::string format = "table";
  int jobs = 1;
  std::uint64_t seed = 0;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json config_json(const std::string& command, const RunConfig& cfg) {
  return {{"command", command}, {"seed", cfg.seed}};
}

int cmd_validate(const std::string& path, const RunConfig& cfg) {
  AlgebraDefinition def = algebra_from_json(read_document(path), path);
  ValidationReport report = validate(def.tensor);
  if (cfg.format == "json") {
    json v = json::array();
    for (const auto& x : report) v.push_back(x.describe());
    emit({{"config", config_json("validate", cfg)},
          {"algebra", def.name},
          {"dim", def.basis.size()},
          {"valid", report.empty()},
          {"violations", v}});
  } else if (report.empty()) {
    std::cout << def.name << ": valid Lie algebra of dimension " << def.basis.size() << "\n";
  } else {
    std::cout << def.name << ": " << report.size() << " violation(s)\n";
    for (const auto& x : report) std::cout << "  " << x.describe() << "\n";
  }
  return report.empty() ? kOk : kNegative;
}

int cmd_cohomology(const std::string& where, const std::vector<int>& ks, int l_max, bool witnesses,
                   const RunConfig& cfg) {
  LieAlgebra g = load_algebra(where);
  std::vector<int> ls;
  for (int l = 0; l <= l_max; ++l) ls.push_back(l);
  auto table = cohomology_table(g, ks, ls, cfg.jobs);
  if (cfg.format == "json") {
    json out = cohomology_table_json(g, table);
    out["config"] = config_json("cohomology", cfg);
    if (witnesses) {
      CEComplex cx(g);
      json w = json::array();
      for (const auto& [kl, d] : table) {
        if (d == 0) continue;
        json basis = json::array();
        for (const auto& z : cx.cohomology_basis(kl.first, kl.second)) basis.push_back(format(z, &g.basis_names()));
        w.push_back({{"k", kl.first}, {"l", kl.second}, {"basis", basis}});
      }
      out["witnesses"] = w;
    }
    emit(out);
    return kOk;
  }
  std::cout << "dim H^k(" << g.name() << ", S^l g)\n";
  std::cout << "k \\ l";
  for (int l : ls) std::cout << "  " << l;
  std::cout << "\n";
  for (int k : ks) {
    std::cout << k << "    ";
    for (int l : ls) std::cout << "  " << table.at({k, l});
    std::cout << "\n";
  }
  if (witnesses) {
    CEComplex cx(g);
    for (const auto& [kl, d] : table) {
      if (d == 0) continue;
      std::cout << "basis of H^" << kl.first << " on S^" << kl.second << ":\n";
      for (const auto& z : cx.cohomology_basis(kl.first, kl.second)) {
        std::cout << "  " << format(z, &g.basis_names()) << "\n";
      }
    }
  }
  return kOk;
}

std::optional<Verdict> parse_expect(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s == "rigid" ? Verdict::RigidUpTo : Verdict::Obstructed;
}

int cmd_rigidity(const std::string& where, const std::string& suite, int L, const std::string& expect,
                 const RunConfig& cfg) {
  if (suite.empty() == where.empty()) throw CLI::ValidationError("rigidity", "give either an algebra or --suite");
  if (!suite.empty()) {
    if (suite != "paper-dim6") throw CLI::ValidationError("--suite", "unknown suite '" + suite + "'");
    auto entries = classification_suite(L, cfg.jobs);
    int positive = 0, negative = 0, mismatches = 0;
    std::vector<RigidityReport> reports;
    json list = json::array();
    for (const auto& e : entries) {
      if (e.report.verdict == Verdict::RigidUpTo) ++positive;
      if (e.report.verdict == Verdict::Obstructed) ++negative;
      if (!e.matches()) ++mismatches;
      reports.push_back(e.report);
      json r = to_json(e.report, catalog(e.report.algebra));
      r["expected"] = to_string(e.expected);
      r["matches"] = e.matches();
      list.push_back(r);
    }
    if (cfg.format == "json") {
      json cfgj = config_json("rigidity", cfg);
      cfgj["suite"] = suite;
      cfgj["L"] = L;
      emit({{"config", cfgj},
            {"reports", list},
            {"rigid_up_to_L", positive},
            {"obstructed", negative},
            {"all_match", mismatches == 0}});
    } else {
      print_rigidity_table(std::cout, reports);
      std::cout << positive << " rigid-up-to-" << L << ", " << negative << " obstructed, " << mismatches
                << " mismatch(es) against the expected panels\n";
    }
    return mismatches == 0 ? kOk : kNegative;
  }
  LieAlgebra g = load_algebra(where);
  RigidityReport rep = rigidity_report(g, L, cfg.jobs);
  if (cfg.format == "json") {
    json out = to_json(rep, g);
    json cfgj = config_json("rigidity", cfg);
    cfgj["L"] = L;
    out["config"] = cfgj;
    emit(out);
  } else {
    print_rigidity_table(std::cout, {rep});
    std::cout << "scope: " << rep.scope << "\n";
    if (rep.witness) {
      std::cout << "witness (k=" << rep.witness->k << ", l=" << rep.witness->l << ", " << rep.witness->source
                << "): " << format(rep.witness->cocycle, &g.basis_names()) << "\n";
    }
    std::cout << "linearization: " << rep.linearization << "\n";
  }
  auto want = parse_expect(expect);
  return want && *want != rep.verdict ? kNegative : kOk;
}

int cmd_star(const std::string& where, const std::string& f_text, const std::string& g_text, int order,
             bool at_one, const GuttOptions& opts, const RunConfig& cfg) {
  LieAlgebra g = load_algebra(where);
  const auto* names = &g.basis_names();
  Polynomial f = parse_polynomial(f_text, g.dim(), g.basis_names());
  Polynomial h = parse_polynomial(g_text, g.dim(), g.basis_names());
  if (at_one) {
    Polynomial v = gutt_star_at_one(g, f, h, opts);
    if (cfg.format == "json") {
      emit({{"config", config_json("star", cfg)}, {"at_one", format(v, names)}});
    } else {
      std::cout << format(v, names) << "\n";
    }
    return kOk;
  }
  StarProduct s = gutt_star(g, f, h, order, opts);
  if (cfg.format == "json") {
    json out = to_json(s, g);
    json cfgj = config_json("star", cfg);
    cfgj["order"] = order;
    out["config"] = cfgj;
    emit(out);
  } else {
    for (std::size_t r = 0; r < s.coefficients.size(); ++r) {
      std::cout << "B" << r << " = " << format(s.coefficients[r], names) << "\n";
    }
  }
  return kOk;
}

PolyMultiVector parse_with_degree(const std::string& text, const LieAlgebra& g, int degree) {
  return parse_multivector(text, g.dim(), g.basis_names(),
                           degree >= 0 ? std::optional<int>(degree) : std::nullopt);
}

int cmd_schouten(const std::string& where, const std::string& p_text, const std::string& q_text, int p_deg,
                 int q_deg, const RunConfig& cfg) {
  LieAlgebra g = load_algebra(where);
  auto p = p_text == "linear" ? linear_poisson(g) : parse_with_degree(p_text, g, p_deg);
  auto q = q_text == "linear" ? linear_poisson(g) : parse_with_degree(q_text, g, q_deg);
  PolyMultiVector r = schouten(p, q);
  if (cfg.format == "json") {
    emit({{"config", config_json("schouten", cfg)}, {"degree", r.degree()}, {"bracket", format(r, &g.basis_names())}});
  } else {
    std::cout << format(r, &g.basis_names()) << "\n";
  }
  return kOk;
}

int cmd_poisson_check(const std::string& where, const std::string& p_text, const std::string& series_path,
                      const RunConfig& cfg) {
  if (series_path.empty() == p_text.empty()) {
    throw CLI::ValidationError("poisson-check", "give either a bivector or --series");
  }
  if (!series_path.empty()) {
    SeriesFile sf = load_series(series_path);
    FormalPoissonReport rep = is_formal_poisson(sf.series);
    const int T = sf.series.truncation();
    if (cfg.format == "json") {
      json orders = json::array();
      for (const auto& o : rep.orders) {
        json row = {{"order", o.order}, {"vanishes", o.vanishes}, {"beyond_truncation", o.beyond_truncation}};
        if (o.witness) {
          row["witness"] = {{"blade", o.witness->blade},
                            {"monomial", format(Polynomial(o.witness->monomial, Scalar(1)), &sf.algebra.basis_names())},
                            {"coefficient", to_string(o.witness->coefficient)}};
        }
        orders.push_back(row);
      }
      emit({{"config", config_json("poisson-check", cfg)},
            {"algebra", sf.algebra.name()},
            {"truncation", T},
            {"formal_poisson", rep.formal_poisson},
            {"orders", orders}});
    } else {
      std::cout << "formal Poisson up to order " << T << ": " << (rep.formal_poisson ? "yes" : "no") << "\n";
      for (const auto& o : rep.orders) {
        std::cout << "  t^" << o.order << ": " << (o.vanishes ? "0" : "nonzero")
                  << (o.beyond_truncation ? " (beyond truncation)" : "") << "\n";
      }
    }
    return rep.formal_poisson ? kOk : kNegative;
  }
  LieAlgebra g = load_algebra(where);
  auto p = p_text == "linear" ? linear_poisson(g) : parse_with_degree(p_text, g, 2);
  PoissonCheck c = is_poisson(p);
  if (cfg.format == "json") {
    emit({{"config", config_json("poisson-check", cfg)},
          {"poisson", c.poisson},
          {"self_bracket", format(schouten(p, p), &g.basis_names())}});
  } else {
    std::cout << "Poisson: " << (c.poisson ? "yes" : "no") << "\n";
    if (!c.poisson) std::cout << "[P, P] = " << format(schouten(p, p), &g.basis_names()) << "\n";
  }
  return c.poisson ? kOk : kNegative;
}

int default_jobs() {
  if (const char* env = std::getenv("DEFQ_JOBS")) {
    try {
      int j = std::stoi(env);
      if (j > 0) return j;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"defq: exact deformation invariants of Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  cfg.jobs = default_jobs();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--jobs,-j", cfg.jobs, "Worker threads (default: DEFQ_JOBS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed recorded in reports and used by selftest");

  std::string path, where, suite, expect, f_text, g_text, p_text, q_text, series;
  std::vector<int> ks{2};
  int l_max = 4, L = 4, order = 2, p_deg = -1, q_deg = -1, count = 50;
  bool witnesses = false, at_one = false;
  GuttOptions gopts;

  auto* validate_cmd = app.add_subcommand("validate", "Check antisymmetry and Jacobi of an algebra file");
  validate_cmd->add_option("path", path, "TOML or JSON definition")->required();

  auto* coh = app.add_subcommand("cohomology", "dim H^k(g, S^l g) table");
  coh->add_option("algebra", where, "Definition file or catalog:<name>")->required();
  coh->add_option("--k", ks, "Cochain degrees")->check(CLI::NonNegativeNumber);
  coh->add_option("--l-max", l_max, "Largest polynomial degree")->check(CLI::NonNegativeNumber);
  coh->add_flag("--witnesses", witnesses, "Also print cocycles spanning each nonzero group");

  auto* rig = app.add_subcommand("rigidity", "Truncated strong-rigidity scan");
  rig->add_option("algebra", where, "Definition file or catalog:<name>");
  rig->add_option("--suite", suite, "Named panel (paper-dim6)");
  rig->add_option("--L", L, "Truncation degree")->check(CLI::NonNegativeNumber);
  rig->add_option("--expect", expect, "Exit 1 unless the verdict matches")->check(CLI::IsMember({"rigid", "obstructed"}));

  auto* star = app.add_subcommand("star", "Gutt star product");
  star->add_option("algebra", where, "Definition file or catalog:<name>")->required();
  star->add_option("f", f_text, "Left factor, polynomial text")->required();
  star->add_option("g", g_text, "Right factor, polynomial text")->required();
  star->add_option("--order", order, "Highest power of lambda")->check(CLI::NonNegativeNumber);
  star->add_flag("--at-one", at_one, "Evaluate at lambda = 1");
  star->add_option("--degree-cap", gopts.degree_cap, "Largest factor degree");
  star->add_option("--bch-cap", gopts.bch_order_cap, "Largest BCH order");

  auto* sch = app.add_subcommand("schouten", "Schouten bracket of two multivectors");
  sch->add_option("algebra", where, "Definition file or catalog:<name>")->required();
  sch->add_option("P", p_text, "Multivector text, or 'linear' for P_0")->required();
  sch->add_option("Q", q_text, "Multivector text, or 'linear' for P_0")->required();
  sch->add_option("--p-degree", p_deg, "Degree of P (needed for '0')");
  sch->add_option("--q-degree", q_deg, "Degree of Q (needed for '0')");

  auto* pc = app.add_subcommand("poisson-check", "Check [P, P] = 0, or a formal series order by order");
  pc->add_option("algebra", where, "Definition file or catalog:<name>");
  pc->add_option("P", p_text, "Bivector text, or 'linear'");
  pc->add_option("--series", series, "Series file");

  auto* st = app.add_subcommand("selftest", "Randomized exact property checks");
  st->add_option("--count", count, "Cases per property")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(path, cfg);
    if (*coh) return cmd_cohomology(where, ks, l_max, witnesses, cfg);
    if (*rig) return cmd_rigidity(where, suite, L, expect, cfg);
    if (*star) return cmd_star(where, f_text, g_text, order, at_one, gopts, cfg);
    if (*sch) return cmd_schouten(where, p_text, q_text, p_deg, q_deg, cfg);
    if (*pc) {
      if (!series.empty() && !where.empty() && p_text.empty()) {
        // "poisson-check --series file" binds nothing positional; a single
        // positional next to --series is a usage error.
        throw CLI::ValidationError("poisson-check", "--series takes no algebra argument");
      }
      return cmd_poisson_check(where, p_text, series, cfg);
    }
    if (*st) return run_selftest(std::cout, cfg.seed, count, cfg.format == "json") ? kOk : kInternal;
  } catch (const CLI::Error& e) {
    std::cerr << "defq: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidAlgebra& e) {
    std::cerr << "defq: " << e.what() << "\n";
    for (const auto& v : e.report) std::cerr << "  " << v.describe() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "defq: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "defq: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "defq: parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // Unknown catalog names, caps exceeded, malformed graphs, bad degrees.
    std::cerr << "defq: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "defq: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
