#include "defq/rigidity.hpp"

#include <numeric>
#include <stdexcept>

#include "defq/multivector_text.hpp"

namespace defq {

std::string to_string(Verdict v) {
  return v == Verdict::RigidUpTo ? "rigid-up-to-L" : "obstructed";
}

namespace {

std::optional<ObstructionWitness> first_nonzero_class(const CEComplex& cx, int k, int l, const std::string& source) {
  for (auto& phi : cx.cocycle_basis(k, l)) {
    auto res = cx.is_coboundary(phi);
    if (!res.primitive) return ObstructionWitness{std::move(phi), k, l, std::move(res.certificate), source};
  }
  return std::nullopt;
}

ObstructionWitness from_deformation(const DeformationWitness& d) {
  return {d.series.terms.at(1), d.coboundary.k, d.coboundary.l, d.coboundary.certificate, "counterexample"};
}

std::string scope_text(int L) {
  return "slices l = 0.." + std::to_string(L) +
         " only; vanishing up to L is evidence for strong rigidity, not a proof for all l";
}

}  // namespace

std::optional<ObstructionWitness> scalar_obstruction(const LieAlgebra& g) {
  CEComplex cx(g);
  if (cx.cohomology_dim(2, 0) == 0) return std::nullopt;
  return first_nonzero_class(cx, 2, 0, "scalar");
}

RigidityReport strong_rigidity_scan(const LieAlgebra& g, int L, int jobs) {
  if (L < 0) throw std::invalid_argument("truncation degree L must be nonnegative");
  RigidityReport rep;
  rep.algebra = g.name();
  rep.L = L;
  std::vector<int> ls;
  for (int l = 0; l <= L; ++l) ls.push_back(l);
  auto dims = cohomology_table(g, {2}, ls, jobs);
  for (int l : ls) rep.table.push_back(dims.at({2, l}));
  rep.scalar_h2 = rep.table[0];
  CEComplex cx(g);
  if (rep.scalar_h2 > 0) rep.scalar_witness = first_nonzero_class(cx, 2, 0, "scalar");
  for (int l : ls) {
    if (rep.table[l] == 0) continue;
    rep.verdict = Verdict::Obstructed;
    rep.witness = l == 0 ? rep.scalar_witness : first_nonzero_class(cx, 2, l, "scan");
    break;
  }
  rep.scope = scope_text(L);
  rep.linearization = linearization_verdict(rep);
  return rep;
}

PolyMultiVector resoluble_p1(const Scalar& alpha, const Scalar& beta, const Scalar& gamma) {
  const LieAlgebra g = catalog("t1_n56");
  const int n = g.dim();
  auto x = [&](int i) { return Polynomial::variable(g.index_of("X" + std::to_string(i))); };
  auto d = [&](int i) { return g.index_of("X" + std::to_string(i)); };
  PolyMultiVector p(n, 2);
  p.add_term({d(1), d(3)}, x(2) * x(2) * beta);
  p.add_term({d(1), d(4)}, x(2) * x(3) * Scalar(-gamma));
  p.add_term({d(3), d(4)}, x(2) * x(5) * gamma);
  p.add_term({d(2), d(4)}, x(1) * x(5) * alpha);
  return p;
}

DeformationWitness verify_resoluble_counterexample(const Scalar& alpha, const Scalar& beta, const Scalar& gamma) {
  if (is_zero(alpha) && is_zero(beta) && is_zero(gamma)) {
    throw std::invalid_argument("(alpha, beta, gamma) must not all vanish");
  }
  const LieAlgebra g = catalog("t1_n56");
  DeformationWitness w;
  w.algebra = g.name();
  PolyMultiVector p1 = resoluble_p1(alpha, beta, gamma);
  w.series = deformation_of(g, {p1});
  const PolyMultiVector& p0 = w.series.terms[0];
  w.self_bracket_zero = schouten(p1, p1).is_zero();
  w.compatible = schouten(p0, p1).is_zero();
  w.poisson = is_formal_poisson(w.series);
  for (int i = 0; i < g.dim(); ++i) w.acting.push_back(i);
  if (w.compatible) w.coboundary = CEComplex(g).is_coboundary(p1);
  return w;
}

bool Sl2N3Certificate::certified() const {
  return witness.certified() && invariant && kernel_basis.size() == 4 && expected_basis_in_span &&
         constant_case.primitive.has_value();
}

Sl2N3Certificate verify_sl2n3_counterexample() {
  const LieAlgebra g = catalog("sl2_n3");
  const int n = g.dim();
  const auto& names = g.basis_names();
  const std::vector<int> b = {g.index_of("h"), g.index_of("e"), g.index_of("f")};
  const std::vector<int> ideal = {g.index_of("q"), g.index_of("p"), g.index_of("z")};
  const int q = ideal[0], p = ideal[1];

  Sl2N3Certificate out;
  DeformationWitness& w = out.witness;
  w.algebra = g.name();
  w.acting = ideal;
  w.invariant_under = b;
  const Polynomial casimir = parse_polynomial("x[h]^2 + 4 x[e] x[f]", n, names);
  PolyMultiVector big_p = PolyMultiVector::blade(n, {q, p}, casimir);
  w.series = deformation_of(g, {big_p});
  w.self_bracket_zero = schouten(big_p, big_p).is_zero();
  w.compatible = schouten(w.series.terms[0], big_p).is_zero();
  w.poisson = is_formal_poisson(w.series);

  CEComplex on_ideal = subcomplex_restrict(g, ideal);
  out.invariant = true;
  for (int x : b) out.invariant = out.invariant && on_ideal.act(x, big_p).is_zero();
  if (w.compatible) w.coboundary = on_ideal.is_invariant_coboundary(b, big_p);
  out.constant_case = on_ideal.is_invariant_coboundary(b, PolyMultiVector::blade(n, {q, p}));

  // F as the kernel of u -> ({x_q, u}, {x_p, u}) on S²g.
  CEComplex full(g);
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  GradedSlice s2(n, all, 0, 2);
  std::vector<SparseVec> cols;
  for (int j = 0; j < s2.dim(); ++j) {
    Cochain u = s2.element(j);
    SparseVec col = s2.coordinates(full.act(q, u));
    for (const auto& [i, c] : s2.coordinates(full.act(p, u))) col.emplace_back(i + s2.dim(), c);
    cols.push_back(std::move(col));
  }
  Echelon span(s2.dim());
  for (const auto& v : kernel(cols, 2 * s2.dim())) {
    Cochain u = s2.cochain(v);
    out.kernel_basis.push_back(u.coefficient({}));
    span.insert(v);
  }
  out.expected_basis_in_span = true;
  for (const char* text : {"x[z]^2", "x[q]^2 - 2 x[e] x[z]", "x[p] x[q] + x[h] x[z]", "x[p]^2 + 2 x[f] x[z]"}) {
    Cochain u = PolyMultiVector::function(n, parse_polynomial(text, n, names));
    out.expected_basis_in_span = out.expected_basis_in_span && span.contains(s2.coordinates(u));
  }
  return out;
}

namespace {

bool same_structure(const LieAlgebra& a, const LieAlgebra& b) {
  return a.basis_names() == b.basis_names() && a.upper_constants() == b.upper_constants();
}

}  // namespace

RigidityReport rigidity_report(const LieAlgebra& g, int L, int jobs) {
  RigidityReport rep = strong_rigidity_scan(g, L, jobs);
  std::optional<DeformationWitness> dw;
  // The α term of P_1 is not a cocycle for these brackets, so the witness
  // is the β-only member of the family.
  if (same_structure(g, catalog("t1_n56"))) dw = verify_resoluble_counterexample(0, 1, 0);
  if (same_structure(g, catalog("sl2_n3"))) dw = verify_sl2n3_counterexample().witness;
  if (dw && dw->certified()) {
    rep.verdict = Verdict::Obstructed;
    rep.witness = from_deformation(*dw);
    rep.deformation = std::move(dw);
    rep.linearization = linearization_verdict(rep);
  }
  return rep;
}

std::vector<SuiteEntry> classification_suite(int L, int jobs) {
  if (L < 2) throw std::invalid_argument("the classification suite needs L >= 2");
  std::vector<SuiteEntry> out;
  for (const auto& name : kPositivePanel) out.push_back({rigidity_report(catalog(name), L, jobs), Verdict::RigidUpTo});
  for (const auto& name : kNegativePanel) out.push_back({rigidity_report(catalog(name), L, jobs), Verdict::Obstructed});
  return out;
}

std::string linearization_verdict(const RigidityReport& report) {
  if (report.deformation && report.deformation->certified()) {
    return "NOT formally linearizable: nontrivial quadratic deformation exists";
  }
  if (report.verdict == Verdict::RigidUpTo) {
    return "every Poisson structure with this linear part is formally linearizable up to degree " +
           std::to_string(report.L + 1) + " obstructions";
  }
  return "undecided: obstruction found but no quadratic deformation witness";
}

}  // namespace defq
