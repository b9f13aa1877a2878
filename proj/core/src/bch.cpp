#include "defq/enveloping.hpp"

#include <algorithm>

namespace defq {

namespace {

Scalar inverse_factorial(int n) {
  Scalar f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return 1 / f;
}

}  // namespace

Scalar bch_coefficient(const std::string& word) {
  const int m = static_cast<int>(word.size());
  for (char c : word) {
    if (c != 'X' && c != 'Y') throw std::invalid_argument("BCH words use the letters X and Y");
  }
  // dp[p][n]: sum over ways to cut word[0, p) into n blocks X^k Y^l (k + l >= 1)
  // of prod 1 / (k! l!).
  std::vector<std::vector<Scalar>> dp(m + 1, std::vector<Scalar>(m + 1));
  dp[0][0] = 1;
  for (int p = 0; p < m; ++p) {
    int xrun = 0;
    while (p + xrun < m && word[p + xrun] == 'X') ++xrun;
    int yrun = 0;
    while (p + xrun + yrun < m && word[p + xrun + yrun] == 'Y') ++yrun;
    for (int n = 0; n < m; ++n) {
      if (is_zero(dp[p][n])) continue;
      for (int k = 1; k <= xrun; ++k) dp[p + k][n + 1] += dp[p][n] * inverse_factorial(k);
      for (int l = 1; l <= yrun; ++l) {
        dp[p + xrun + l][n + 1] += dp[p][n] * inverse_factorial(xrun) * inverse_factorial(l);
      }
    }
  }
  const int xs = static_cast<int>(std::count(word.begin(), word.end(), 'X'));
  Scalar sum = 0;
  for (int n = 1; n <= m; ++n) {
    Scalar sign = n % 2 == 0 ? 1 : -1;
    sum += sign / (n + 1) * dp[m][n];
  }
  return sum / (xs + 1);
}

std::vector<Scalar> BCHTerm::evaluate(const LieAlgebra& g, const std::vector<Scalar>& xi,
                                      const std::vector<Scalar>& eta) const {
  std::vector<Scalar> v = xi;
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = g.bracket(*it == 'X' ? xi : eta, v);
  return v;
}

std::vector<BCHTerm> bch_terms(int order) {
  std::vector<BCHTerm> out;
  for (int m = 1; m <= order; ++m) {
    for (unsigned bits = 0; bits < (1u << m); ++bits) {
      std::string w(m, 'X');
      for (int i = 0; i < m; ++i) {
        if (bits & (1u << (m - 1 - i))) w[i] = 'Y';
      }
      // ad(ξ) ξ = 0, so words ending in X contribute nothing.
      if (w.back() == 'X') continue;
      Scalar c = bch_coefficient(w);
      if (!is_zero(c)) out.push_back({w, c});
    }
  }
  return out;
}

std::vector<std::vector<Scalar>> bch(const LieAlgebra& g, const std::vector<Scalar>& xi,
                                     const std::vector<Scalar>& eta, int order, int order_cap) {
  if (order < 0) throw std::invalid_argument("negative BCH order");
  if (order > order_cap) throw CapExceeded("BCH order " + std::to_string(order) + " exceeds cap " + std::to_string(order_cap));
  const int n = g.dim();
  if (static_cast<int>(xi.size()) != n || static_cast<int>(eta.size()) != n) {
    throw std::invalid_argument("BCH arguments have the wrong dimension");
  }
  std::vector<std::vector<Scalar>> out(order + 1, std::vector<Scalar>(n));
  for (int i = 0; i < n; ++i) out[0][i] = xi[i] + eta[i];
  for (const auto& t : bch_terms(order)) {
    auto v = t.evaluate(g, xi, eta);
    for (int i = 0; i < n; ++i) out[t.order()][i] += t.coefficient * v[i];
  }
  return out;
}

}  // namespace defq
