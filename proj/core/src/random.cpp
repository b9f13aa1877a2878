#include "defq/random.hpp"

#include <algorithm>
#include <numeric>

namespace defq {

Scalar random_scalar(Rng& rng) {
  std::uniform_int_distribution<int> num(1, 5), den(1, 3), sign(0, 1);
  Scalar s(num(rng) * (sign(rng) ? 1 : -1), den(rng));
  s.canonicalize();
  return s;
}

namespace {

Monomial random_monomial(Rng& rng, int dim, int degree) {
  std::vector<int> e(dim, 0);
  std::uniform_int_distribution<int> var(0, dim - 1);
  for (int i = 0; i < degree; ++i) ++e[var(rng)];
  return Monomial::from_exponents(e);
}

}  // namespace

Polynomial random_polynomial(Rng& rng, int dim, int degree, int terms, bool homogeneous) {
  Polynomial out;
  if (dim == 0) return degree == 0 || !homogeneous ? Polynomial(random_scalar(rng)) : out;
  std::uniform_int_distribution<int> deg(0, degree);
  for (int t = 0; t < terms; ++t) {
    out.add_term(random_monomial(rng, dim, homogeneous ? degree : deg(rng)), random_scalar(rng));
  }
  return out;
}

PolyMultiVector random_multivector(Rng& rng, int dim, int k, int poly_degree, int terms, bool homogeneous) {
  PolyMultiVector out(dim, k);
  if (k > dim) return out;
  std::vector<int> idx(dim);
  std::iota(idx.begin(), idx.end(), 0);
  for (int t = 0; t < terms; ++t) {
    std::shuffle(idx.begin(), idx.end(), rng);
    Blade b(idx.begin(), idx.begin() + k);
    out.add_term(b, random_polynomial(rng, dim, poly_degree, 2, homogeneous));
  }
  return out;
}

}  // namespace defq
