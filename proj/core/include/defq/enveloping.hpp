#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "defq/lie_algebra.hpp"
#include "defq/multivector.hpp"
#include "defq/polynomial.hpp"

namespace defq {

// Nondecreasing word y_{i_1} ... y_{i_d} in the ordered basis of g.
using PBWMonomial = std::vector<int>;

// Total degree first, then lexicographic.
struct PBWOrder {
  bool operator()(const PBWMonomial& a, const PBWMonomial& b) const {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};

class UgElement {
 public:
  using Terms = std::map<PBWMonomial, Scalar, PBWOrder>;

  UgElement() = default;
  explicit UgElement(const Scalar& c);
  // Throws unless `word` is nondecreasing.
  UgElement(PBWMonomial word, const Scalar& c);

  static UgElement generator(int i) { return UgElement({i}, Scalar(1)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // kZeroDegree for zero

  void add_term(const PBWMonomial& word, const Scalar& c);
  UgElement& operator+=(const UgElement& other);
  UgElement& operator-=(const UgElement& other);
  UgElement& operator*=(const Scalar& s);
  friend UgElement operator+(UgElement a, const UgElement& b) { return a += b; }
  friend UgElement operator-(UgElement a, const UgElement& b) { return a -= b; }
  friend UgElement operator*(UgElement a, const Scalar& s) { return a *= s; }

  bool operator==(const UgElement&) const = default;

 private:
  Terms terms_;
};

// PBW normal-form arithmetic in Ug. Keeps a memo of y_I * y_i products, so
// one instance must not be shared between threads.
class PBW {
 public:
  explicit PBW(LieAlgebra g) : g_(std::move(g)) {}

  const LieAlgebra& algebra() const { return g_; }

  UgElement multiply(const UgElement& u, const UgElement& v);
  // y_{w_1} y_{w_2} ... for an arbitrary (unsorted) word.
  UgElement word(const std::vector<int>& letters);

  // ω(x_1 ... x_d) = (1/d!) sum_σ y_σ(1) ... y_σ(d), extended linearly.
  UgElement symmetrize(const Polynomial& f);
  // ω^{-1} by peeling off top-degree PBW terms.
  Polynomial unsymmetrize(const UgElement& u);

  // ad(e_x) u = y_x u - u y_x
  UgElement adjoint(int x, const UgElement& u);

 private:
  const UgElement& times_generator(const PBWMonomial& w, int i);

  LieAlgebra g_;
  std::map<std::pair<PBWMonomial, int>, UgElement> memo_;
};

UgElement pbw_multiply(const LieAlgebra& g, const UgElement& u, const UgElement& v);
UgElement symmetrize(const LieAlgebra& g, const Polynomial& f);
Polynomial unsymmetrize(const LieAlgebra& g, const UgElement& u);

// ---- Baker-Campbell-Hausdorff ----

// One Lie word of the series: coefficient * ad(w_1) ... ad(w_m) ξ with letters
// 'X' = ad ξ and 'Y' = ad η. Its λ-order is m.
struct BCHTerm {
  std::string word;
  Scalar coefficient;
  int order() const { return static_cast<int>(word.size()); }
  std::vector<Scalar> evaluate(const LieAlgebra& g, const std::vector<Scalar>& xi,
                               const std::vector<Scalar>& eta) const;
};

inline constexpr int kDefaultBCHOrderCap = 6;

// All words of λ-order 1..order with nonzero coefficient, obtained by summing
// the (k_1, l_1, ..., k_n, l_n) index family block by block.
std::vector<BCHTerm> bch_terms(int order);

// Coefficient of a single word.
Scalar bch_coefficient(const std::string& word);

class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// H(ξ, η) truncated: result[m] is the coefficient of λ^m, result[0] = ξ + η.
std::vector<std::vector<Scalar>> bch(const LieAlgebra& g, const std::vector<Scalar>& xi,
                                     const std::vector<Scalar>& eta, int order,
                                     int order_cap = kDefaultBCHOrderCap);

// ---- Gutt star product ----

struct GuttOptions {
  int degree_cap = 4;
  int bch_order_cap = kDefaultBCHOrderCap;
};

// f ⋆_G g = sum_r λ^r B_r(f, g); coefficients[r] = B_r.
struct StarProduct {
  std::vector<Polynomial> coefficients;
  Polynomial at_one() const;
};

// B_0 .. B_order, computed from e_ξ ⋆ e_η = e_{H(ξ, η)} by polarization.
// Throws CapExceeded if a factor's degree exceeds the cap or the needed BCH
// order exceeds its cap.
StarProduct gutt_star(const LieAlgebra& g, const Polynomial& f, const Polynomial& h, int order,
                      const GuttOptions& options = {});

// Every λ-order the pair can produce (total degree - 1), evaluated at λ = 1.
Polynomial gutt_star_at_one(const LieAlgebra& g, const Polynomial& f, const Polynomial& h,
                            const GuttOptions& options = {});

// ---- Kontsevich-type graph operators ----

class MalformedGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GraphOperator {
  int r = 0;
  std::vector<int> partition;  // n_1, ..., n_r, M, N
  std::vector<int> sigma;      // one-line form, values 1..2r
  Scalar weight = 1;

  // Throws MalformedGraph.
  void check() const;
};

// The graph with all derivatives on f and g: partition (0, ..., 0, r, r),
// σ(2k-1) = k, σ(2k) = r + k, weight 1/r!.
GraphOperator exponential_graph(int r);

// Every (n_1, ..., n_r, M, N) of nonnegative integers summing to 2r.
std::vector<std::vector<int>> partitions_of(int r);

// B_Γ(f, g) with slot i filled by bivectors[i], times op.weight.
Polynomial graph_apply(const GraphOperator& op, const std::vector<PolyMultiVector>& bivectors,
                       const Polynomial& f, const Polynomial& g);

// B_{k,Γ}(f, g) = sum over b_1 + ... + b_r = k of graph_apply with slots
// P_{b_1}, ..., P_{b_r}; terms with b_i beyond the truncation are absent.
Polynomial graph_apply_series(const GraphOperator& op, const FormalBivectorSeries& s, int k,
                              const Polynomial& f, const Polynomial& g);

// Weight-table text format, version 1:
//
//   # defq-graphs v1
//   r=2 partition=0,0,2,2 sigma=1,3,2,4 weight=1/2
//
// Blank lines and further '#' lines are ignored.
std::vector<GraphOperator> read_graph_table(std::istream& in);
void write_graph_table(std::ostream& out, const std::vector<GraphOperator>& ops);

}  // namespace defq
