#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "defq/lie_algebra.hpp"
#include "defq/polynomial.hpp"

namespace defq {

// Strictly increasing basis indices i_1 < ... < i_k naming d_{i_1} ^ ... ^ d_{i_k}.
using Blade = std::vector<int>;

// Puts `indices` into increasing order. Returns the permutation sign, or 0 if an
// index repeats.
int canonicalize_blade(Blade& indices);

// sum_I f_I d_I on g*, with all |I| equal to degree(). Also read as a
// Chevalley-Eilenberg cochain in Hom(Λ^k g, S g): the coefficient of d_I is
// the value on (e_{i_1}, ..., e_{i_k}).
class PolyMultiVector {
 public:
  using Terms = std::map<Blade, Polynomial>;

  PolyMultiVector() = default;
  PolyMultiVector(int dim, int degree);

  static PolyMultiVector function(int dim, const Polynomial& f);
  static PolyMultiVector blade(int dim, Blade indices, const Polynomial& coeff = Polynomial(1));

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const;

  // Highest polynomial degree among coefficients; kZeroDegree for zero.
  int poly_degree() const;
  // True if every coefficient is homogeneous of degree l.
  bool is_homogeneous(int l) const;
  // Part whose coefficients have polynomial degree exactly l.
  PolyMultiVector component(int l) const;

  Polynomial coefficient(const Blade& sorted) const;

  // Adds coeff * d_{indices[0]} ^ ... in whatever order the indices come.
  void add_term(Blade indices, const Polynomial& coeff);
  void add_term(Blade indices, const Monomial& m, const Scalar& c);

  PolyMultiVector& operator+=(const PolyMultiVector& other);
  PolyMultiVector& operator-=(const PolyMultiVector& other);
  PolyMultiVector& operator*=(const Scalar& s);
  PolyMultiVector operator-() const;
  friend PolyMultiVector operator+(PolyMultiVector a, const PolyMultiVector& b) { return a += b; }
  friend PolyMultiVector operator-(PolyMultiVector a, const PolyMultiVector& b) { return a -= b; }
  friend PolyMultiVector operator*(PolyMultiVector a, const Scalar& s) { return a *= s; }
  friend PolyMultiVector operator*(const Scalar& s, PolyMultiVector a) { return a *= s; }

  // Multiplies every coefficient by f.
  PolyMultiVector times(const Polynomial& f) const;

  bool operator==(const PolyMultiVector&) const = default;

 private:
  void check_compatible(const PolyMultiVector& other) const;

  int dim_ = 0;
  int degree_ = 0;
  Terms terms_;
};

PolyMultiVector wedge(const PolyMultiVector& u, const PolyMultiVector& v);

// Lie derivative of q along the vector field f d_i.
PolyMultiVector lie_derivative(const Polynomial& f, int i, const PolyMultiVector& q);

// Schouten-Nijenhuis bracket, computed from the graded Leibniz rule down to
// Lie derivatives along vector fields. Conventions:
//   [P, Q] = -(-1)^{(p-1)(q-1)} [Q, P]
//   [P, Q ^ R] = [P, Q] ^ R + (-1)^{pq+q} Q ^ [P, R]
//   [X, f] = X(f),  [X, Y] = Lie bracket of vector fields.
PolyMultiVector schouten(const PolyMultiVector& p, const PolyMultiVector& q);

// Second path: explicit coordinate formula for two bivectors, with P^{ij}
// the full antisymmetric coefficient matrix. The display summed over all
// (i, j, k) is scaled by kBivectorBivectorCalibration.
PolyMultiVector schouten_bivector_bivector(const PolyMultiVector& p, const PolyMultiVector& q);
extern const Scalar kBivectorBivectorCalibration;

// Second path for a bivector and a vector field:
//   [P, A] = 1/2 sum_{i,j,k} (P^{ik} d_k A^j + P^{kj} d_k A^i - A^k d_k P^{ij}) d_i ^ d_j.
PolyMultiVector schouten_bivector_vector(const PolyMultiVector& p, const PolyMultiVector& a);

// P_0 = sum_{i<j} (sum_k C^k_ij x_k) d_i ^ d_j.
PolyMultiVector linear_poisson(const LieAlgebra& g);

struct MultivectorWitness {
  Blade blade;
  Monomial monomial;
  Scalar coefficient;
};

struct PoissonCheck {
  bool poisson = true;
  std::optional<MultivectorWitness> witness;
};

// Throws std::invalid_argument unless p has degree 2.
PoissonCheck is_poisson(const PolyMultiVector& p);

// First nonzero coefficient in canonical order, if any.
std::optional<MultivectorWitness> first_nonzero(const PolyMultiVector& v);

// P_0 + t P_1 + ... + t^T P_T.
struct FormalBivectorSeries {
  std::vector<PolyMultiVector> terms;
  int truncation() const { return static_cast<int>(terms.size()) - 1; }
};

FormalBivectorSeries deformation_of(const LieAlgebra& g, std::vector<PolyMultiVector> higher = {});

struct FormalPoissonOrder {
  int order = 0;
  bool vanishes = true;
  // Orders above the truncation only see part of the series.
  bool beyond_truncation = false;
  std::optional<MultivectorWitness> witness;
};

struct FormalPoissonReport {
  std::vector<FormalPoissonOrder> orders;  // a = 0..2T
  bool formal_poisson = true;             // conjunction over a <= T
};

FormalPoissonReport is_formal_poisson(const FormalBivectorSeries& s);

}  // namespace defq
