#include <doctest.h>

#include "defq/cohomology.hpp"
#include "defq/multivector_text.hpp"
#include "defq/random.hpp"
#include "defq/sparse_linalg.hpp"
#include "oracles/casimir.hpp"
#include "oracles/module_ce.hpp"
#include "oracles/scalar_ce.hpp"

using namespace defq;

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

oracle::Structure dense_constants(const LieAlgebra& g) {
  const int n = g.dim();
  oracle::Structure c(n, std::vector<std::vector<oracle::Q>>(n, std::vector<oracle::Q>(n, 0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) c[i][j][k] = g.constant(i, j, k);
  return c;
}

std::vector<LieAlgebra> small_catalog() {
  std::vector<LieAlgebra> out;
  for (const auto& name : catalog_names()) {
    if (name != "glm_km(m)") out.push_back(catalog(name));
  }
  return out;
}

}  // namespace

TEST_CASE("scalar cohomology against the dense textbook complex") {
  for (const auto& g : small_catalog()) {
    CEComplex cx(g);
    const auto c = dense_constants(g);
    for (int k = 0; k <= std::min(3, g.dim()); ++k) {
      CAPTURE(g.name());
      CAPTURE(k);
      CHECK(cx.cohomology_dim(k, 0) == oracle::scalar_cohomology_dim(c, k));
    }
  }
}

TEST_CASE("coefficient slices against the dense module complex") {
  for (const char* name : {"r2", "n3", "sl2", "k_x_k2_scalar", "gl2"}) {
    LieAlgebra g = catalog(name);
    CEComplex cx(g);
    const auto c = dense_constants(g);
    for (int l = 1; l <= 3; ++l) {
      int dim_v = 0;
      const oracle::Rep rho = oracle::symmetric_power(c, l, &dim_v);
      for (int k = 1; k <= std::min(2, g.dim()); ++k) {
        CAPTURE(name);
        CAPTURE(k);
        CAPTURE(l);
        CHECK(cx.cohomology_dim(k, l) == oracle::module_cohomology_dim(c, rho, dim_v, k));
      }
    }
  }
}

TEST_CASE("known scalar values") {
  CHECK(CEComplex(catalog("n3")).cohomology_dim(2, 0) == 2);
  CHECK(CEComplex(catalog("sl2")).cohomology_dim(2, 0) == 0);
  CHECK(CEComplex(catalog("sl2")).cohomology_dim(3, 0) == 1);
  CHECK(CEComplex(catalog("borel_sl3")).cohomology_dim(2, 0) == 1);
  CHECK(CEComplex(catalog("r2")).cohomology_dim(1, 0) == 1);
}

TEST_CASE("delta squares to zero, preserves degree and matches [P0, .]") {
  Rng rng(5);
  auto algebras = small_catalog();
  for (int trial = 0; trial < 300; ++trial) {
    const LieAlgebra& g = algebras[uniform(rng, 0, static_cast<int>(algebras.size()) - 1)];
    if (g.dim() == 0) continue;
    const int k = uniform(rng, 0, std::min(3, g.dim())), l = uniform(rng, 0, 3);
    auto phi = random_multivector(rng, g.dim(), k, l, 3);
    Cochain d = ce_diff(g, phi);
    CAPTURE(g.name());
    CAPTURE(format(phi));
    CHECK(ce_diff(g, d).is_zero());
    CHECK(d == ce_diff_schouten(g, phi));
    CHECK((d.is_zero() || d.is_homogeneous(l)));
  }
}

TEST_CASE("primitives and certificates") {
  Rng rng(9);
  for (const char* name : {"n3", "sl2", "t1_n56", "borel_sl3"}) {
    LieAlgebra g = catalog(name);
    CEComplex cx(g);
    for (int l = 0; l <= 2; ++l) {
      // A coboundary always has a primitive.
      auto psi = random_multivector(rng, g.dim(), 1, l, 4);
      Cochain phi = cx.diff(psi);
      if (!phi.is_zero()) {
        auto res = cx.is_coboundary(phi);
        REQUIRE(res.primitive.has_value());
        CHECK(cx.diff(*res.primitive) == phi);
      }
      // Non-trivial classes carry a certificate that kills every coboundary.
      GradedSlice s1 = cx.slice(1, l), s2 = cx.slice(2, l);
      for (const auto& z : cx.cohomology_basis(2, l)) {
        auto res = cx.is_coboundary(z);
        CHECK_FALSE(res.primitive.has_value());
        CHECK(dot(res.certificate, s2.coordinates(z)) != 0);
        for (int j = 0; j < s1.dim(); ++j) CHECK(dot(res.certificate, s2.coordinates(cx.diff(s1.element(j)))) == 0);
      }
    }
    auto junk = random_multivector(rng, g.dim(), 2, 1, 4);
    if (!cx.diff(junk).is_zero()) CHECK_THROWS_AS(cx.is_coboundary(junk), NotACocycleError);
  }
}

TEST_CASE("cohomology basis has the right size") {
  for (const char* name : {"n3", "t1_n56", "sl2_n3", "borel_sl3"}) {
    CEComplex cx(catalog(name));
    for (int l = 0; l <= 2; ++l) {
      CAPTURE(name);
      CAPTURE(l);
      CHECK(static_cast<int>(cx.cohomology_basis(2, l).size()) == cx.cohomology_dim(2, l));
    }
  }
}

TEST_CASE("cohomology tables do not depend on the job count") {
  LieAlgebra g = catalog("t1_n56");
  auto one = cohomology_table(g, {1, 2, 3}, {0, 1, 2}, 1);
  auto four = cohomology_table(g, {1, 2, 3}, {0, 1, 2}, 4);
  CHECK(one == four);
  CHECK(one.at({2, 2}) == 2);
}

TEST_CASE("H2 with polynomial coefficients on small examples") {
  CHECK(CEComplex(catalog("n3")).cohomology_dim(2, 1) == 5);
  CHECK(CEComplex(catalog("sl2_n3")).cohomology_dim(2, 2) == 1);
  for (int l = 0; l <= 3; ++l) {
    CHECK(CEComplex(catalog("r2")).cohomology_dim(2, l) == 0);
    CHECK(CEComplex(catalog("sl2")).cohomology_dim(2, l) == 0);
  }
}

TEST_CASE("Hochschild-Serre dimensions") {
  LieAlgebra r2 = catalog("r2");
  auto rep = hochschild_serre_check(r2, {0}, {1}, 2, 4);
  CHECK(rep.all_equal());
  CHECK(rep.rows.size() == 5);

  LieAlgebra s = catalog("sl2_n3");
  auto rep2 = hochschild_serre_check(s, {0, 1, 2}, {3, 4, 5}, 2, 2);
  CHECK(rep2.all_equal());
  CHECK(rep2.rows[2].lhs == 1);

  // b = g, n = 0
  auto rep3 = hochschild_serre_check(catalog("sl2"), {0, 1, 2}, {}, 2, 2);
  CHECK(rep3.all_equal());
  CHECK_THROWS_AS(hochschild_serre_check(s, {3, 4, 5}, {0, 1, 2}, 2, 1), NotAnIdeal);
}

TEST_CASE("trace powers on gl(m) x K^m") {
  for (int m = 1; m <= 2; ++m) {
    LieAlgebra g = glm_km(m);
    std::vector<int> module;
    for (int i = 0; i < m; ++i) module.push_back(g.index_of("e" + std::to_string(i + 1)));
    CEComplex on_module = subcomplex_restrict(g, module);
    for (int a = 1; a <= 2; ++a) {
      const oracle::DPoly xi = oracle::trace_power(g, m, a);
      Polynomial xi_lib;
      for (const auto& [e, c] : xi.t) xi_lib.add_term(Monomial::from_exponents(e), c);
      Cochain d = on_module.diff(PolyMultiVector::function(g.dim(), xi_lib));
      for (int k = 0; k < m; ++k) {
        CAPTURE(m);
        CAPTURE(a);
        CAPTURE(k);
        CHECK(oracle::from_lib(d.coefficient({module[k]}), g.dim()) == oracle::expected_delta(g, m, a, k));
      }
    }
  }
}

TEST_CASE("invariant slice of sl2_n3 holds the Casimir cochain") {
  LieAlgebra g = catalog("sl2_n3");
  const std::vector<int> b = {0, 1, 2}, ideal = {3, 4, 5};
  CEComplex cx = subcomplex_restrict(g, ideal);
  auto inv = cx.invariant_slice(b, 2, 2);
  REQUIRE_FALSE(inv.empty());
  GradedSlice s = cx.slice(2, 2);
  Echelon span(s.dim());
  for (const auto& v : inv) span.insert(s.coordinates(v));
  Cochain casimir = parse_multivector("x[h]^2 * d[q]^d[p] + 4 x[e] x[f] * d[q]^d[p]", 6, g.basis_names());
  CHECK(span.contains(s.coordinates(casimir)));
  CHECK(cx.invariant_cohomology_dim(b, 2, 2) >= 1);
}

TEST_CASE("subcomplex_restrict checks the ideal") {
  LieAlgebra g = catalog("sl2_n3");
  CHECK_THROWS_AS(subcomplex_restrict(g, {0, 1}), NotAnIdeal);
}

TEST_CASE("graded slices") {
  GradedSlice s(3, {0, 1, 2}, 2, 1);
  CHECK(s.dim() == 9);
  for (int i = 0; i < s.dim(); ++i) {
    auto v = s.coordinates(s.element(i));
    REQUIRE(v.size() == 1);
    CHECK(v[0].first == i);
  }
  CHECK_THROWS_AS(s.coordinates(PolyMultiVector::blade(3, {0, 1})), std::invalid_argument);
  CHECK(monomials_of_degree(3, 2).size() == 6);
}
