#pragma once

// Minimal dense-exponent polynomials for oracles, plus conversion from the
// library types. Arithmetic here is written from scratch.

#include <map>
#include <vector>

#include "defq/multivector.hpp"
#include "defq/polynomial.hpp"
#include "dense.hpp"

namespace oracle {

using Exps = std::vector<int>;

struct DPoly {
  int n = 0;
  std::map<Exps, Q> t;

  explicit DPoly(int n_ = 0) : n(n_) {}
  static DPoly constant(int n, const Q& c) {
    DPoly p(n);
    if (c != 0) p.t[Exps(n, 0)] = c;
    return p;
  }
  static DPoly var(int n, int i) {
    DPoly p(n);
    Exps e(n, 0);
    e[i] = 1;
    p.t[e] = 1;
    return p;
  }
  void add(const Exps& e, const Q& c) {
    Q& slot = t[e];
    slot += c;
    if (slot == 0) t.erase(e);
  }
  DPoly& operator+=(const DPoly& o) {
    for (const auto& [e, c] : o.t) add(e, c);
    return *this;
  }
  DPoly operator*(const DPoly& o) const {
    DPoly r(n);
    for (const auto& [a, x] : t)
      for (const auto& [b, y] : o.t) {
        Exps e(n);
        for (int i = 0; i < n; ++i) e[i] = a[i] + b[i];
        r.add(e, x * y);
      }
    return r;
  }
  DPoly scaled(const Q& s) const {
    DPoly r(n);
    for (const auto& [e, c] : t) r.add(e, c * s);
    return r;
  }
  DPoly diff(int i) const {
    DPoly r(n);
    for (const auto& [e, c] : t) {
      if (e[i] == 0) continue;
      Exps f = e;
      --f[i];
      r.add(f, c * e[i]);
    }
    return r;
  }
  bool zero() const { return t.empty(); }
  bool operator==(const DPoly& o) const { return t == o.t; }
};

inline DPoly from_lib(const defq::Polynomial& p, int n) {
  DPoly r(n);
  for (const auto& [m, c] : p.terms()) r.add(m.dense(n), c);
  return r;
}

}  // namespace oracle
