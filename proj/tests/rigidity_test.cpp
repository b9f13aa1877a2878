#include <doctest.h>

#include "defq/multivector_text.hpp"
#include "defq/report_json.hpp"
#include "defq/rigidity.hpp"
#include "oracles/module_ce.hpp"

using namespace defq;

TEST_CASE("positive panel at L = 2") {
  for (const auto& name : kPositivePanel) {
    CAPTURE(name);
    auto rep = strong_rigidity_scan(catalog(name), 2);
    CHECK(rep.verdict == Verdict::RigidUpTo);
    CHECK(rep.table == std::vector<int>{0, 0, 0});
    CHECK_FALSE(rep.witness.has_value());
    CHECK(rep.linearization.find("formally linearizable up to degree 3") != std::string::npos);
  }
}

TEST_CASE("scalar obstructions") {
  auto n3 = scalar_obstruction(catalog("n3"));
  REQUIRE(n3.has_value());
  CHECK(n3->l == 0);
  CHECK_FALSE(CEComplex(catalog("n3")).is_coboundary(n3->cocycle).primitive.has_value());
  CHECK(scalar_obstruction(catalog("borel_sl3")).has_value());
  CHECK_FALSE(scalar_obstruction(catalog("sl2")).has_value());
}

TEST_CASE("scalar action on K^2 is not Lie-rigid") {
  LieAlgebra g = catalog("k_x_k2_scalar");
  auto rep = strong_rigidity_scan(g, 3);
  oracle::Structure c(3, std::vector<std::vector<oracle::Q>>(3, std::vector<oracle::Q>(3, 0)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j][k] = g.constant(i, j, k);
  for (int l = 0; l <= 3; ++l) {
    int dim_v = 1;
    const oracle::Rep rho = l == 0 ? oracle::Rep(3, oracle::zeros(1, 1)) : oracle::symmetric_power(c, l, &dim_v);
    CAPTURE(l);
    CHECK(rep.table[l] == oracle::module_cohomology_dim(c, rho, dim_v, 2));
  }
  // H^2 vanishes off l = 1; l = 1 is H^2(g, g).
  CHECK(rep.table[0] == 0);
  CHECK(rep.table[1] > 0);
  CHECK(rep.table[2] == 0);
  CHECK(rep.table[3] == 0);
  CHECK(rep.verdict == Verdict::Obstructed);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->l == 1);
}

TEST_CASE("scan witnesses") {
  auto rep = strong_rigidity_scan(catalog("sl2_n3"), 2);
  CHECK(rep.verdict == Verdict::Obstructed);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->l == 2);
  CHECK(rep.witness->source == "scan");
  CHECK(rep.linearization.find("undecided") == 0);
}

TEST_CASE("the resoluble family") {
  auto beta = verify_resoluble_counterexample(0, 1, 0);
  CHECK(beta.certified());
  CHECK(beta.poisson.formal_poisson);

  // The published (1, 1, 1) member: the α term is not a cocycle.
  auto all = verify_resoluble_counterexample(1, 1, 1);
  CHECK_FALSE(all.compatible);
  CHECK_FALSE(all.self_bracket_zero);
  CHECK_FALSE(all.certified());

  auto alpha = verify_resoluble_counterexample(1, 0, 0);
  CHECK_FALSE(alpha.compatible);

  CHECK_THROWS_AS(verify_resoluble_counterexample(0, 0, 0), std::invalid_argument);
  const LieAlgebra t = catalog("t1_n56");
  CHECK(format(resoluble_p1(0, 1, 0), &t.basis_names()) == "x[X2]^2 * d[X1]^d[X3]");
}

TEST_CASE("the sl2 n3 certificate") {
  auto cert = verify_sl2n3_counterexample();
  CHECK(cert.witness.self_bracket_zero);
  CHECK(cert.witness.compatible);
  CHECK(cert.invariant);
  CHECK_FALSE(cert.witness.coboundary.primitive.has_value());
  CHECK(cert.kernel_basis.size() == 4);
  CHECK(cert.expected_basis_in_span);
  CHECK(cert.constant_case.primitive.has_value());
  CHECK(cert.certified());
}

TEST_CASE("reports attach deformation witnesses") {
  auto rep = rigidity_report(catalog("t1_n56"), 2);
  CHECK(rep.verdict == Verdict::Obstructed);
  REQUIRE(rep.deformation.has_value());
  CHECK(rep.witness->source == "counterexample");
  CHECK(rep.linearization == "NOT formally linearizable: nontrivial quadratic deformation exists");

  auto n3 = rigidity_report(catalog("n3"), 2);
  CHECK_FALSE(n3.deformation.has_value());
  CHECK(n3.witness->source == "scalar");
}

TEST_CASE("classification suite at L = 2") {
  auto suite = classification_suite(2);
  REQUIRE(suite.size() == 12);
  for (const auto& e : suite) {
    CAPTURE(e.report.algebra);
    CHECK(e.matches());
  }
  CHECK_THROWS_AS(classification_suite(1), std::invalid_argument);
}

TEST_CASE("report JSON is stable") {
  LieAlgebra g = catalog("sl2_n3");
  auto rep = rigidity_report(g, 2);
  auto a = to_json(rep, g).dump(), b = to_json(rigidity_report(g, 2, 3), g).dump();
  CHECK(a == b);
  auto j = to_json(rep, g);
  CHECK(j["verdict"] == "obstructed");
  CHECK(j["h2_by_l"] == nlohmann::json::array({0, 0, 1}));
  CHECK(j["deformation"]["coboundary"].contains("certificate"));
}
