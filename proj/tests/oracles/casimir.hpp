#pragma once

// Trace powers on gl(m) ⋉ K^m written directly in coordinates. A point of
// the dual is (φ, α) with x_{E_ij} = φ_ji and x_{e_i} = α_i.

#include <string>
#include <vector>

#include "defq/lie_algebra.hpp"
#include "poly.hpp"

namespace oracle {

using PolyMatrix = std::vector<std::vector<DPoly>>;

inline PolyMatrix phi_matrix(const defq::LieAlgebra& g, int m) {
  const int n = g.dim();
  PolyMatrix phi(m, std::vector<DPoly>(m, DPoly(n)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      phi[i][j] = DPoly::var(n, g.index_of("E" + std::to_string(j + 1) + std::to_string(i + 1)));
  return phi;
}

inline PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b, int n) {
  const std::size_t m = a.size();
  PolyMatrix c(m, std::vector<DPoly>(m, DPoly(n)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline PolyMatrix matpow(const defq::LieAlgebra& g, int m, int a) {
  const int n = g.dim();
  PolyMatrix p(m, std::vector<DPoly>(m, DPoly(n)));
  for (int i = 0; i < m; ++i) p[i][i] = DPoly::constant(n, 1);
  const PolyMatrix phi = phi_matrix(g, m);
  for (int k = 0; k < a; ++k) p = matmul(p, phi, n);
  return p;
}

// ξ^a(φ) = tr(φ^a)
inline DPoly trace_power(const defq::LieAlgebra& g, int m, int a) {
  PolyMatrix p = matpow(g, m, a);
  DPoly t(g.dim());
  for (int i = 0; i < m; ++i) t += p[i][i];
  return t;
}

// -a <α, φ^{a-1} e_k>
inline DPoly expected_delta(const defq::LieAlgebra& g, int m, int a, int k) {
  PolyMatrix p = matpow(g, m, a - 1);
  DPoly out(g.dim());
  for (int i = 0; i < m; ++i) out += DPoly::var(g.dim(), g.index_of("e" + std::to_string(i + 1))) * p[i][k];
  return out.scaled(-a);
}

}  // namespace oracle
