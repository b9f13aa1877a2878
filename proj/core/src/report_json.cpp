#include "defq/report_json.hpp"

#include <algorithm>
#include <iomanip>

#include "defq/multivector_text.hpp"

namespace defq {

using nlohmann::json;

json to_json(const SparseVec& v) {
  json out = json::array();
  for (const auto& [i, c] : v) out.push_back({i, to_string(c)});
  return out;
}

json to_json(const ObstructionWitness& w, const LieAlgebra& g) {
  return {{"cocycle", format(w.cocycle, &g.basis_names())},
          {"k", w.k},
          {"l", w.l},
          {"certificate", to_json(w.certificate)},
          {"source", w.source}};
}

namespace {

json names_of(const std::vector<int>& idx, const LieAlgebra& g) {
  json out = json::array();
  for (int i : idx) out.push_back(g.basis_names()[i]);
  return out;
}

json coboundary_json(const CoboundaryResult& r, const LieAlgebra& g) {
  json out = {{"k", r.k}, {"l", r.l}, {"coboundary", r.primitive.has_value()}};
  if (r.primitive) {
    out["primitive"] = format(*r.primitive, &g.basis_names());
  } else {
    out["certificate"] = to_json(r.certificate);
  }
  return out;
}

}  // namespace

json to_json(const DeformationWitness& w, const LieAlgebra& g) {
  json terms = json::array();
  for (const auto& t : w.series.terms) terms.push_back(format(t, &g.basis_names()));
  return {{"algebra", w.algebra},
          {"series", terms},
          {"self_bracket_zero", w.self_bracket_zero},
          {"compatible", w.compatible},
          {"formal_poisson", w.poisson.formal_poisson},
          {"acting", names_of(w.acting, g)},
          {"invariant_under", names_of(w.invariant_under, g)},
          {"coboundary", coboundary_json(w.coboundary, g)},
          {"certified", w.certified()}};
}

json to_json(const RigidityReport& r, const LieAlgebra& g) {
  json out = {{"algebra", r.algebra},
              {"L", r.L},
              {"h2_by_l", r.table},
              {"verdict", to_string(r.verdict)},
              {"scalar_h2", r.scalar_h2},
              {"scope", r.scope},
              {"linearization", r.linearization}};
  out["witness"] = r.witness ? to_json(*r.witness, g) : json(nullptr);
  out["scalar_witness"] = r.scalar_witness ? to_json(*r.scalar_witness, g) : json(nullptr);
  out["deformation"] = r.deformation ? to_json(*r.deformation, g) : json(nullptr);
  return out;
}

json to_json(const Sl2N3Certificate& c, const LieAlgebra& g) {
  json kernel = json::array();
  for (const auto& f : c.kernel_basis) kernel.push_back(format(f, &g.basis_names()));
  return {{"witness", to_json(c.witness, g)},
          {"invariant", c.invariant},
          {"kernel_basis", kernel},
          {"expected_basis_in_span", c.expected_basis_in_span},
          {"constant_case", coboundary_json(c.constant_case, g)},
          {"certified", c.certified()}};
}

json to_json(const HochschildSerreReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"l", row.l}, {"lhs", row.lhs}, {"rhs", row.rhs}, {"equal", row.equal()}});
  }
  return {{"p", r.p}, {"rows", rows}, {"hypothesis", r.hypothesis}, {"all_equal", r.all_equal()}};
}

json to_json(const StarProduct& s, const LieAlgebra& g) {
  json coeffs = json::array();
  for (const auto& b : s.coefficients) coeffs.push_back(format(b, &g.basis_names()));
  return {{"coefficients", coeffs}, {"at_one", format(s.at_one(), &g.basis_names())}};
}

json cohomology_table_json(const LieAlgebra& g, const std::map<std::pair<int, int>, int>& table) {
  json rows = json::array();
  for (const auto& [kl, d] : table) rows.push_back({{"k", kl.first}, {"l", kl.second}, {"dim", d}});
  return {{"algebra", g.name()}, {"dims", rows}};
}

void print_rigidity_table(std::ostream& out, const std::vector<RigidityReport>& reports) {
  std::size_t name_w = 7;
  int L = 0;
  for (const auto& r : reports) {
    name_w = std::max(name_w, r.algebra.size());
    L = std::max(L, r.L);
  }
  out << std::left << std::setw(static_cast<int>(name_w)) << "algebra";
  for (int l = 0; l <= L; ++l) out << "  " << std::right << std::setw(4) << ("l=" + std::to_string(l));
  out << "  verdict\n";
  for (const auto& r : reports) {
    out << std::left << std::setw(static_cast<int>(name_w)) << r.algebra;
    for (int l = 0; l <= L; ++l) {
      out << "  " << std::right << std::setw(4);
      if (l < static_cast<int>(r.table.size())) {
        out << r.table[l];
      } else {
        out << "-";
      }
    }
    out << "  " << (r.verdict == Verdict::RigidUpTo ? "rigid-up-to-" + std::to_string(r.L) : "obstructed") << "\n";
  }
}

}  // namespace defq
