#pragma once

// Enveloping algebra by brute-force word rewriting: yx -> xy - [x, y] until
// every word is nondecreasing. Symmetrization averages over all orderings.

#include <algorithm>
#include <map>
#include <vector>

#include "defq/lie_algebra.hpp"
#include "poly.hpp"

namespace oracle {

using Word = std::vector<int>;
using UElem = std::map<Word, Q>;

inline void add_to(UElem& u, const Word& w, const Q& c) {
  Q& slot = u[w];
  slot += c;
  if (slot == 0) u.erase(w);
}

inline UElem normal_order(const defq::LieAlgebra& g, UElem u) {
  UElem done;
  while (!u.empty()) {
    auto [w, c] = *u.begin();
    u.erase(u.begin());
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
    if (i + 1 >= w.size()) {
      add_to(done, w, c);
      continue;
    }
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    add_to(u, swapped, c);
    // w = ..ba.. = ..ab.. + ..[b,a]..
    for (const auto& [k, s] : g.bracket(w[i], w[i + 1])) {
      Word shorter(w.begin(), w.begin() + i);
      shorter.push_back(k);
      shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
      add_to(u, shorter, c * s);
    }
  }
  return done;
}

inline UElem product(const defq::LieAlgebra& g, const UElem& a, const UElem& b) {
  UElem raw;
  for (const auto& [u, x] : a)
    for (const auto& [v, y] : b) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      add_to(raw, w, x * y);
    }
  return normal_order(g, raw);
}

inline UElem symmetrize(const defq::LieAlgebra& g, const DPoly& f) {
  UElem raw;
  for (const auto& [e, c] : f.t) {
    Word letters;
    for (int i = 0; i < f.n; ++i)
      for (int k = 0; k < e[i]; ++k) letters.push_back(i);
    std::vector<Word> orders;
    do orders.push_back(letters);
    while (std::next_permutation(letters.begin(), letters.end()));
    const Q share = c / Q(static_cast<long>(orders.size()));
    for (const auto& w : orders) add_to(raw, w, share);
  }
  return normal_order(g, raw);
}

inline DPoly unsymmetrize(const defq::LieAlgebra& g, UElem u) {
  DPoly out(g.dim());
  while (!u.empty()) {
    std::size_t top = 0;
    for (const auto& [w, c] : u) top = std::max(top, w.size());
    DPoly lead(g.dim());
    for (const auto& [w, c] : u) {
      if (w.size() != top) continue;
      Exps e(g.dim(), 0);
      for (int i : w) ++e[i];
      lead.add(e, c);
    }
    out += lead;
    for (const auto& [w, c] : symmetrize(g, lead)) add_to(u, w, -c);
  }
  return out;
}

// ω^{-1}(ω(f) ω(h))
inline DPoly transported_product(const defq::LieAlgebra& g, const DPoly& f, const DPoly& h) {
  return unsymmetrize(g, product(g, symmetrize(g, f), symmetrize(g, h)));
}

}  // namespace oracle
