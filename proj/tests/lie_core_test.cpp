#include <doctest.h>

#include <random>

#include "defq/lie_algebra.hpp"
#include "defq/random.hpp"
#include "oracles/dense.hpp"

using namespace defq;

namespace {

std::vector<std::string> every_catalog_name() {
  std::vector<std::string> out;
  for (const auto& name : catalog_names()) {
    if (name != "glm_km(m)") out.push_back(name);
  }
  return out;
}

Scalar c(const LieAlgebra& g, const std::string& a, const std::string& b, const std::string& out) {
  return g.constant(g.index_of(a), g.index_of(b), g.index_of(out));
}

}  // namespace

TEST_CASE("catalog entries are Lie algebras") {
  for (const auto& name : every_catalog_name()) {
    CAPTURE(name);
    CHECK(validate(catalog(name)).empty());
  }
  for (int m = 1; m <= 3; ++m) CHECK(validate(glm_km(m)).empty());
  CHECK_THROWS_AS(catalog("so3"), UnknownAlgebra);
}

TEST_CASE("sl2 constants") {
  LieAlgebra g = catalog("sl2");
  CHECK(c(g, "h", "e", "e") == 2);
  CHECK(c(g, "e", "h", "e") == -2);
  CHECK(c(g, "h", "f", "f") == -2);
  CHECK(c(g, "e", "f", "h") == 1);
  CHECK(g.bracket(g.index_of("e"), g.index_of("e")).empty());
}

TEST_CASE("dimensions of the catalog") {
  CHECK(catalog("zero").dim() == 0);
  CHECK(catalog("t1_n56").dim() == 6);
  CHECK(catalog("sl2_n3").dim() == 6);
  CHECK(catalog("gl2_x_k2").dim() == 6);
  CHECK(catalog("borel_sl3").dim() == 5);
  CHECK(glm_km(3).dim() == 12);
}

TEST_CASE("validate reports broken tensors") {
  ConstantTensor t;
  t.dim = 2;
  t.entries[{0, 1, 1}] = 1;
  t.entries[{1, 0, 1}] = 1;
  auto report = validate(t);
  REQUIRE(report.size() == 1);
  CHECK(report[0].kind == AxiomViolation::Kind::Antisymmetry);

  // [a,b] = c, [b,c] = a, [a,c] = c violates Jacobi
  LieAlgebra bad("bad", {"a", "b", "c"}, {{0, 1, 2, 1}, {1, 2, 0, 1}, {0, 2, 2, 1}});
  auto jac = validate(bad);
  REQUIRE_FALSE(jac.empty());
  CHECK(jac[0].kind == AxiomViolation::Kind::Jacobi);
}

TEST_CASE("constructor rejects inconsistent orientations") {
  CHECK_THROWS_AS(LieAlgebra("x", {"a", "b"}, {{0, 1, 0, 1}, {1, 0, 0, 1}}), StructuralError);
  CHECK_NOTHROW(LieAlgebra("x", {"a", "b"}, {{0, 1, 0, 1}, {1, 0, 0, -1}}));
  CHECK_THROWS_AS(LieAlgebra("x", {"a", "a"}, {}), StructuralError);
  CHECK_THROWS_AS(LieAlgebra("x", {"a"}, {{0, 0, 0, 1}}), StructuralError);
}

TEST_CASE("direct sums") {
  LieAlgebra s = direct_sum(catalog("r2"), catalog("sl2"));
  CHECK(s.dim() == 5);
  CHECK(validate(s).empty());
  for (int i = 0; i < 2; ++i)
    for (int j = 2; j < 5; ++j) CHECK(s.bracket(i, j).empty());
  CHECK(validate(direct_sum(catalog("sl2"), catalog("sl2"))).empty());

  auto names = every_catalog_name();
  for (const auto& a : names)
    for (const auto& b : names) {
      LieAlgebra ga = catalog(a), gb = catalog(b);
      if (ga.dim() + gb.dim() > 8) continue;
      CAPTURE(a);
      CAPTURE(b);
      CHECK(validate(direct_sum(ga, gb)).empty());
    }
}

namespace {

// ρ(X) = P X P^{-1} + t tr(X) I, a representation of gl(m) for any invertible P.
ActionMatrices random_gl_action(Rng& rng, int m) {
  oracle::Matrix p;
  do {
    p = oracle::zeros(m, m);
    for (auto& row : p)
      for (auto& v : row) v = random_scalar(rng);
  } while (oracle::rank(p) < m);
  // Inverse by Gauss-Jordan on [P | I].
  oracle::Matrix aug = oracle::zeros(m, 2 * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) aug[i][j] = p[i][j];
    aug[i][m + i] = 1;
  }
  for (int col = 0; col < m; ++col) {
    int piv = col;
    while (aug[piv][col] == 0) ++piv;
    std::swap(aug[piv], aug[col]);
    oracle::Q d = aug[col][col];
    for (auto& v : aug[col]) v /= d;
    for (int r = 0; r < m; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      oracle::Q f = aug[r][col];
      for (int j = 0; j < 2 * m; ++j) aug[r][j] -= f * aug[col][j];
    }
  }
  oracle::Matrix inv = oracle::zeros(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) inv[i][j] = aug[i][m + j];
  const Scalar t = std::uniform_int_distribution<int>(0, 1)(rng) ? random_scalar(rng) : Scalar(0);

  ActionMatrices action;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      oracle::Matrix e = oracle::zeros(m, m);
      e[i][j] = 1;
      oracle::Matrix r = oracle::mul(oracle::mul(p, e), inv);
      std::vector<Scalar> flat;
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) flat.push_back(r[a][b] + (a == b && i == j ? t : Scalar(0)));
      action.push_back(flat);
    }
  return action;
}

}  // namespace

TEST_CASE("semidirect sums with random representations of gl(1) and gl(2)") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = trial % 2 + 1;
    LieAlgebra s = semidirect_sum(gl(m), m, random_gl_action(rng, m));
    CHECK(s.dim() == m * m + m);
    CHECK(validate(s).empty());
  }
}

TEST_CASE("semidirect sum rejects a non-homomorphism") {
  // sl2 with h acting by 1, e and f by 0 on K^1: [h, e] = 2e must act as 0.
  ActionMatrices action = {{Scalar(1)}, {Scalar(0)}, {Scalar(0)}};
  CHECK_THROWS_AS(semidirect_sum(catalog("sl2"), 1, action), ActionNotHomomorphism);
}

TEST_CASE("glm_km(1) is r2") {
  LieAlgebra g = glm_km(1);
  REQUIRE(g.dim() == 2);
  CHECK(g.constant(0, 1, 1) == 1);
}

TEST_CASE("central extension of the abelian plane is the Heisenberg algebra") {
  LieAlgebra k2("k2", {"q", "p"}, {});
  Cocycle2Scalar omega(2);
  omega.set(0, 1, 1);
  LieAlgebra h = central_extension(k2, omega, "z");
  CHECK(validate(h).empty());
  CHECK(h.upper_constants() == catalog("n3").upper_constants());
}

TEST_CASE("central extension validates iff the form is a cocycle") {
  Rng rng(11);
  int accepted = 0, rejected = 0;
  for (const char* name : {"n3", "r2", "t1_n56"}) {
    LieAlgebra g = catalog(name);
    for (int trial = 0; trial < 40; ++trial) {
      Cocycle2Scalar omega(g.dim());
      for (int i = 0; i < g.dim(); ++i)
        for (int j = i + 1; j < g.dim(); ++j) {
          if (std::uniform_int_distribution<int>(0, 2)(rng) > 0) omega.set(i, j, random_scalar(rng));
        }
      const bool cocycle = is_scalar_cocycle(g, omega);
      if (cocycle) {
        ++accepted;
        CHECK(validate(central_extension(g, omega)).empty());
      } else {
        ++rejected;
        CHECK_THROWS_AS(central_extension(g, omega), NotACocycle);
      }
    }
  }
  // Every 2-form on n3 or r2 is closed; t1_n56 supplies the rejections.
  CHECK(accepted > 0);
  CHECK(rejected > 0);
}

TEST_CASE("ideals and subalgebras") {
  LieAlgebra g = catalog("sl2_n3");
  std::vector<int> ideal = {g.index_of("q"), g.index_of("p"), g.index_of("z")};
  std::vector<int> levi = {g.index_of("h"), g.index_of("e"), g.index_of("f")};
  CHECK(g.is_ideal(ideal));
  CHECK(g.is_subalgebra(levi));
  CHECK_FALSE(g.is_ideal(levi));
  CHECK_FALSE(g.is_subalgebra({g.index_of("e"), g.index_of("f")}));
}
