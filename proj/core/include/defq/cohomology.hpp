#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "defq/lie_algebra.hpp"
#include "defq/multivector.hpp"
#include "defq/sparse_linalg.hpp"

namespace defq {

// A Chevalley-Eilenberg cochain in Hom(Λ^k g, S g), stored as a multivector.
using Cochain = PolyMultiVector;

// Basis of Hom(Λ^k h, S^l g) for a set h of acting basis indices: blades over
// h in lexicographic order, monomials of degree l in graded-lex order.
// Coordinate of (blade b, monomial m) is b * monomials.size() + m.
class GradedSlice {
 public:
  GradedSlice(int dim, std::vector<int> acting, int k, int l);

  int k() const { return k_; }
  int l() const { return l_; }
  int dim() const { return static_cast<int>(blades_.size() * monomials_.size()); }
  const std::vector<Blade>& blades() const { return blades_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  // -1 if the pair is not in the slice.
  int index(const Blade& b, const Monomial& m) const;
  Cochain element(int index) const;

  // Throws std::invalid_argument if phi has terms outside the slice.
  SparseVec coordinates(const Cochain& phi) const;
  Cochain cochain(const SparseVec& v) const;

 private:
  int ambient_;
  int k_, l_;
  std::vector<Blade> blades_;
  std::vector<Monomial> monomials_;
  std::map<Blade, int> blade_index_;
  std::map<Monomial, int> monomial_index_;
};

// All monomials of degree l in n variables, graded-lex order.
std::vector<Monomial> monomials_of_degree(int n, int l);

class NotAnIdeal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotASubalgebra : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotACocycleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CoboundaryResult {
  std::optional<Cochain> primitive;
  // When no primitive exists: a functional on slice coordinates of degree k
  // killing every coboundary in the searched space but not phi.
  SparseVec certificate;
  int k = 0;
  int l = 0;
};

// The CE complex of a subalgebra or ideal h (basis index subset of g) with
// coefficients in S g, g acting through h by the adjoint action extended as
// derivations. With h = g this is the complex of g with values in S g; the
// l = 0 slice is the scalar complex.
class CEComplex {
 public:
  explicit CEComplex(LieAlgebra g);
  CEComplex(LieAlgebra g, std::vector<int> acting);

  const LieAlgebra& algebra() const { return g_; }
  const std::vector<int>& acting() const { return acting_; }
  bool is_full() const { return static_cast<int>(acting_.size()) == g_.dim(); }

  GradedSlice slice(int k, int l) const { return GradedSlice(g_.dim(), acting_, k, l); }

  // δφ = sum_{i in h} e^i ^ (e_i . φ) - 1/2 sum C^i_kl e^k ^ e^l ^ i(e_i) φ
  // with e_i . f = {x_i, f}.
  Cochain diff(const Cochain& phi) const;

  // Columns δ(basis of (k, l)) in coordinates of slice (k + 1, l).
  std::vector<SparseVec> diff_columns(int k, int l) const;
  std::vector<SparseVec> diff_columns(const GradedSlice& from, const GradedSlice& to) const;

  int rank_diff(int k, int l) const;
  int cohomology_dim(int k, int l) const;

  // Kernel of δ on slice (k, l), as cochains.
  std::vector<Cochain> cocycle_basis(int k, int l) const;
  // Cocycles whose classes form a basis of H^k on slice l.
  std::vector<Cochain> cohomology_basis(int k, int l) const;

  // φ must be a cocycle, homogeneous of some degree l; throws NotACocycleError.
  CoboundaryResult is_coboundary(const Cochain& phi) const;

  // x . φ for x = e_x with [e_x, h] ⊂ h: coefficients by {x_x, .}, cochain
  // slots by the coadjoint action restricted to h.
  Cochain act(int x, const Cochain& phi) const;

  // Basis of the cochains in slice (k, l) annihilated by every e_b, b in `b`.
  std::vector<Cochain> invariant_slice(const std::vector<int>& b, int k, int l) const;

  // Cohomology of the b-invariant subcomplex in degree k, slice l.
  int invariant_cohomology_dim(const std::vector<int>& b, int k, int l) const;

  // Same as is_coboundary but with primitives restricted to b-invariant
  // (k - 1)-cochains.
  CoboundaryResult is_invariant_coboundary(const std::vector<int>& b, const Cochain& phi) const;

 private:
  void check_b(const std::vector<int>& b) const;

  LieAlgebra g_;
  std::vector<int> acting_;
  // For each i: (k, l, C^i_kl) with k < l in h.
  std::vector<std::vector<std::tuple<int, int, Scalar>>> d_dual_;
};

Cochain ce_diff(const LieAlgebra& g, const Cochain& phi);
Cochain ce_diff_schouten(const LieAlgebra& g, const Cochain& phi);

int cohomology_dim(const LieAlgebra& g, int k, int l);

// Dimensions for every (k, l) pair, computed as independent jobs on up to
// `jobs` threads; the result is keyed and therefore deterministic.
std::map<std::pair<int, int>, int> cohomology_table(const LieAlgebra& g, const std::vector<int>& ks,
                                                    const std::vector<int>& ls, int jobs = 1);

CoboundaryResult is_coboundary(const LieAlgebra& g, const Cochain& phi);

// Complex of the ideal `ideal` acting on S g. Throws NotAnIdeal.
CEComplex subcomplex_restrict(const LieAlgebra& g, const std::vector<int>& ideal);

// Subalgebra spanned by basis indices, as a standalone Lie algebra.
LieAlgebra subalgebra(const LieAlgebra& g, const std::vector<int>& indices);

struct HochschildSerreRow {
  int l = 0;
  int lhs = 0;  // dim H^p(g, S^l g)
  int rhs = 0;  // sum_{i+j=p} dim H^i(b, K) dim H^j(n, S^l g)^b
  bool equal() const { return lhs == rhs; }
};

struct HochschildSerreReport {
  int p = 0;
  std::vector<HochschildSerreRow> rows;
  // Reductivity of b in g is taken from the caller, never checked.
  std::string hypothesis = "b reductive in g: assumed";
  bool all_equal() const;
};

HochschildSerreReport hochschild_serre_check(const LieAlgebra& g, const std::vector<int>& b,
                                             const std::vector<int>& n_ideal, int p, int l_max);

}  // namespace defq
