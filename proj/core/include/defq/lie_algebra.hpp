#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "defq/scalar.hpp"

namespace defq {

// Thrown for index ranges or shapes that do not describe a Lie algebra at all
// (as opposed to a well-formed tensor that violates an axiom).
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sparse vector of g in the basis e_0..e_{n-1}: sorted (index, coefficient).
using LieVector = std::vector<std::pair<int, Scalar>>;

// A finite-dimensional Lie algebra given by structure constants
// [e_i, e_j] = sum_k C^k_ij e_k. Only i < j is stored; the rest follows by
// antisymmetry. Values are immutable once built.
class LieAlgebra {
 public:
  // Key (i, j, k) with i < j.
  using ConstantMap = std::map<std::tuple<int, int, int>, Scalar>;

  LieAlgebra() = default;

  // Throws StructuralError on out-of-range or duplicate-name input, or if the
  // i == j diagonal is nonzero. Entries with i > j are folded by sign; a pair
  // given in both orders must agree.
  LieAlgebra(std::string name, std::vector<std::string> basis_names,
             const std::vector<std::tuple<int, int, int, Scalar>>& constants);

  // Builds from an (i,j,k) map with i < j, no checks beyond ranges.
  static LieAlgebra from_upper(std::string name, std::vector<std::string> basis_names,
                               const ConstantMap& upper);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(basis_names_.size()); }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  int index_of(const std::string& basis_name) const;

  // C^k_ij with the antisymmetric extension.
  Scalar constant(int i, int j, int k) const;

  // [e_i, e_j] as a sparse vector.
  const LieVector& bracket(int i, int j) const { return table_[i * dim() + j]; }

  // Bracket of arbitrary dense vectors.
  std::vector<Scalar> bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

  const ConstantMap& upper_constants() const { return upper_; }

  bool is_abelian() const { return upper_.empty(); }

  // Checks that the span of the given basis indices is closed under bracket.
  bool is_subalgebra(const std::vector<int>& indices) const;
  // Checks that [g, span] is contained in span.
  bool is_ideal(const std::vector<int>& indices) const;

 private:
  void build_table();

  std::string name_;
  std::vector<std::string> basis_names_;
  ConstantMap upper_;
  std::vector<LieVector> table_;
};

struct AxiomViolation {
  enum class Kind { Antisymmetry, Jacobi };
  Kind kind;
  // (i, j, k, l) for Jacobi; (i, j, k, -1) for antisymmetry.
  std::array<int, 4> indices;
  Scalar value;
  std::string describe() const;
};

using ValidationReport = std::vector<AxiomViolation>;

// A raw structure-constant tensor, before antisymmetry is imposed. Used to
// validate untrusted input: LieAlgebra itself is antisymmetric by construction.
struct ConstantTensor {
  int dim = 0;
  // (i, j, k) -> C^k_ij, any order of i and j.
  std::map<std::tuple<int, int, int>, Scalar> entries;
};

ValidationReport validate(const ConstantTensor& tensor);
ValidationReport validate(const LieAlgebra& g);

// Antisymmetric scalar 2-form on g.
class Cocycle2Scalar {
 public:
  explicit Cocycle2Scalar(int dim) : dim_(dim), values_(dim * dim) {}

  int dim() const { return dim_; }
  const Scalar& operator()(int i, int j) const { return values_[i * dim_ + j]; }
  // Sets omega(e_i, e_j) = v and omega(e_j, e_i) = -v. Throws on i == j with v != 0.
  void set(int i, int j, const Scalar& v);

 private:
  int dim_;
  std::vector<Scalar> values_;
};

// True iff omega satisfies the scalar Chevalley-Eilenberg cocycle condition.
bool is_scalar_cocycle(const LieAlgebra& g, const Cocycle2Scalar& omega);

LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2);

// action[a] is the n_dim x n_dim matrix (row-major) by which basis element
// e_a of `a` acts on K^{n_dim}.
using ActionMatrices = std::vector<std::vector<Scalar>>;

class ActionNotHomomorphism : public std::invalid_argument {
 public:
  ActionNotHomomorphism(int i, int j)
      : std::invalid_argument("action is not a homomorphism on pair (" + std::to_string(i) + ", " +
                              std::to_string(j) + ")"),
        pair(i, j) {}
  std::pair<int, int> pair;
};

// a ⋉ K^{n_dim} with [phi + v, phi' + v'] = [phi, phi'] + phi v' - phi' v.
LieAlgebra semidirect_sum(const LieAlgebra& a, int n_dim, const ActionMatrices& action,
                          std::vector<std::string> module_names = {});

class NotACocycle : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// g ⊕ K c with [X, Y]' = [X, Y] + omega(X, Y) c; c is the last basis vector.
LieAlgebra central_extension(const LieAlgebra& g, const Cocycle2Scalar& omega,
                             std::string central_name = "c");

class UnknownAlgebra : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Named algebras. Accepts zero, k1, r2, sl2, gl2, n3, n56, t1_n56, sl2_x_r2,
// sl2_x_sl2, gl2_x_k2, sl2_n3, glm_km(m), borel_sl3, k_x_k2_scalar.
LieAlgebra catalog(const std::string& name);
std::vector<std::string> catalog_names();

// gl(m) with basis E_ij (row i, column j), index i * m + j.
LieAlgebra gl(int m);
// gl(m) ⋉ K^m with the natural action.
LieAlgebra glm_km(int m);

}  // namespace defq
