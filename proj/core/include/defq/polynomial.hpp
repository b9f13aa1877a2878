#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "defq/scalar.hpp"

namespace defq {

// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

// x_1^{a_1} ... x_n^{a_n} stored sparsely as (index, exponent) pairs with
// strictly increasing indices and positive exponents.
class Monomial {
 public:
  using Factor = std::pair<int, int>;

  Monomial() = default;

  static Monomial variable(int index, int power = 1);
  static Monomial from_exponents(std::span<const int> dense);

  int degree() const { return degree_; }
  int exponent(int index) const;
  bool is_one() const { return factors_.empty(); }
  const std::vector<Factor>& factors() const { return factors_; }
  std::vector<int> dense(int dim) const;

  Monomial operator*(const Monomial& other) const;

  // d/dx_index; nullopt when the variable is absent. The integer is the
  // multiplicity brought down by differentiation.
  std::optional<std::pair<int, Monomial>> derivative(int index) const;

  bool operator==(const Monomial&) const = default;

  // Graded-lex: lower total degree first; within a degree, larger exponent of
  // the earlier variable first (x1^2 < x1 x2 < x2^2).
  std::strong_ordering operator<=>(const Monomial& other) const;

 private:
  std::vector<Factor> factors_;
  int degree_ = 0;
};

// Element of S g, i.e. a polynomial function on g*.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar>;

  Polynomial() = default;
  explicit Polynomial(const Scalar& constant);
  Polynomial(const Monomial& m, const Scalar& coeff);

  static Polynomial variable(int index) { return Polynomial(Monomial::variable(index), Scalar(1)); }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  // kZeroDegree for the zero polynomial.
  int degree() const;
  bool is_homogeneous(int degree) const;
  Scalar coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Scalar& coeff);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& factor);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial derivative(int index) const;

  // Homogeneous component of the given degree.
  Polynomial component(int degree) const;

  // Evaluates at a point of g* given by its coordinates.
  Scalar evaluate(std::span<const Scalar> point) const;

  bool operator==(const Polynomial&) const = default;

 private:
  Terms terms_;
};

}  // namespace defq
