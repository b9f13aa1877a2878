#pragma once

// Multivector fields as superfunctions f(x) θ_{i_1}...θ_{i_k} with odd θ_i
// standing for ∂_i, and the Schouten bracket as the odd Poisson bracket
//   [P, Q] = Σ_i (P ∂⃖/∂θ_i)(∂Q/∂x_i) - (∂P/∂x_i)(∂⃗Q/∂θ_i).

#include <bit>
#include <map>

#include "poly.hpp"

namespace oracle {

struct Super {
  int n = 0;
  std::map<unsigned, DPoly> t;  // θ mask -> coefficient

  explicit Super(int n_ = 0) : n(n_) {}

  void add(unsigned mask, const DPoly& f) {
    auto [it, fresh] = t.try_emplace(mask, DPoly(n));
    it->second += f;
    if (it->second.zero()) t.erase(it);
  }
  Super& operator+=(const Super& o) {
    for (const auto& [m, f] : o.t) add(m, f);
    return *this;
  }
  Super scaled(const Q& s) const {
    Super r(n);
    for (const auto& [m, f] : t) r.add(m, f.scaled(s));
    return r;
  }
  bool zero() const { return t.empty(); }
  bool operator==(const Super& o) const {
    if (t.size() != o.t.size()) return false;
    for (const auto& [m, f] : t) {
      auto it = o.t.find(m);
      if (it == o.t.end() || !(it->second == f)) return false;
    }
    return true;
  }
};

// Sign of θ_A θ_B after sorting into θ_{A∪B}; 0 if they overlap.
inline int wedge_sign(unsigned a, unsigned b) {
  if (a & b) return 0;
  int swaps = 0;
  for (int i = 0; i < 32; ++i)
    if (b >> i & 1u) swaps += std::popcount(a >> (i + 1));
  return swaps % 2 == 0 ? 1 : -1;
}

inline Super mul(const Super& p, const Super& q) {
  Super r(p.n);
  for (const auto& [a, f] : p.t)
    for (const auto& [b, g] : q.t) {
      int s = wedge_sign(a, b);
      if (s != 0) r.add(a | b, (f * g).scaled(s));
    }
  return r;
}

inline Super d_x(const Super& p, int i) {
  Super r(p.n);
  for (const auto& [m, f] : p.t) r.add(m, f.diff(i));
  return r;
}

inline Super d_theta_left(const Super& p, int i) {
  Super r(p.n);
  for (const auto& [m, f] : p.t) {
    if (!(m >> i & 1u)) continue;
    int before = std::popcount(m & ((1u << i) - 1));
    r.add(m & ~(1u << i), f.scaled(before % 2 == 0 ? 1 : -1));
  }
  return r;
}

inline Super d_theta_right(const Super& p, int i) {
  Super r(p.n);
  for (const auto& [m, f] : p.t) {
    if (!(m >> i & 1u)) continue;
    int after = std::popcount(m >> (i + 1));
    r.add(m & ~(1u << i), f.scaled(after % 2 == 0 ? 1 : -1));
  }
  return r;
}

inline Super schouten(const Super& p, const Super& q) {
  Super r(p.n);
  for (int i = 0; i < p.n; ++i) {
    r += mul(d_theta_right(p, i), d_x(q, i));
    r += mul(d_x(p, i), d_theta_left(q, i)).scaled(-1);
  }
  return r;
}

inline Super from_lib(const defq::PolyMultiVector& v) {
  Super r(v.dim());
  for (const auto& [blade, f] : v.terms()) {
    unsigned mask = 0;
    for (int i : blade) mask |= 1u << i;
    r.add(mask, from_lib(f, v.dim()));
  }
  return r;
}

}  // namespace oracle
