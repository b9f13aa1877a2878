#pragma once

// Chevalley-Eilenberg cohomology with trivial coefficients from the textbook
// formula dφ(x_0..x_k) = Σ_{i<j} (-1)^{i+j} φ([x_i,x_j], x_0..x̂_i..x̂_j..x_k),
// on dense matrices.

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

#include "dense.hpp"

namespace oracle {

// c[i][j][k] = C^k_ij, fully populated.
using Structure = std::vector<std::vector<std::vector<Q>>>;

inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Matrix of d: C^k -> C^{k+1}, rows indexed by (k+1)-subsets.
inline Matrix scalar_ce_matrix(const Structure& c, int k) {
  const int n = static_cast<int>(c.size());
  auto src = subsets(n, k), dst = subsets(n, k + 1);
  std::map<std::vector<int>, int> col;
  for (std::size_t i = 0; i < src.size(); ++i) col[src[i]] = static_cast<int>(i);
  Matrix m = zeros(dst.size(), src.size());
  if (src.empty()) return m;
  for (std::size_t r = 0; r < dst.size(); ++r) {
    const auto& x = dst[r];
    for (int i = 0; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        const Q sign = (i + j) % 2 == 0 ? 1 : -1;
        std::vector<int> rest;
        for (int t = 0; t <= k; ++t)
          if (t != i && t != j) rest.push_back(x[t]);
        for (int out = 0; out < n; ++out) {
          const Q& coef = c[x[i]][x[j]][out];
          if (coef == 0) continue;
          // φ(e_out, rest...) in terms of the sorted basis cochain.
          if (std::find(rest.begin(), rest.end(), out) != rest.end()) continue;
          std::vector<int> args = rest;
          args.insert(args.begin(), out);
          int inversions = 0;
          for (std::size_t a = 0; a < args.size(); ++a)
            for (std::size_t b = a + 1; b < args.size(); ++b)
              if (args[a] > args[b]) ++inversions;
          std::sort(args.begin(), args.end());
          m[r][col.at(args)] += sign * coef * (inversions % 2 == 0 ? 1 : -1);
        }
      }
  }
  return m;
}

inline int scalar_cohomology_dim(const Structure& c, int k) {
  const int n = static_cast<int>(c.size());
  const int dim_k = static_cast<int>(subsets(n, k).size());
  const int r_out = k + 1 <= n ? rank(scalar_ce_matrix(c, k)) : 0;
  const int r_in = k >= 1 ? rank(scalar_ce_matrix(c, k - 1)) : 0;
  return dim_k - r_out - r_in;
}

}  // namespace oracle
