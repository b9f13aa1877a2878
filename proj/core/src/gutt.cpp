#include <algorithm>
#include <bit>
#include <map>

#include "defq/enveloping.hpp"

namespace defq {

Polynomial StarProduct::at_one() const {
  Polynomial out;
  for (const auto& b : coefficients) out += b;
  return out;
}

namespace {

// Multilinear pieces H_B of H(sum t_i ξ_i, sum s_j η_j): for a set B of
// t- and s-variables, the coefficient of prod_{u in B} u, a vector in g.
// The ξ_i and η_j are basis vectors given by index.
class PolarizedBCH {
 public:
  PolarizedBCH(const LieAlgebra& g, std::vector<int> xs, std::vector<int> ys)
      : g_(g), xs_(std::move(xs)), ys_(std::move(ys)) {}

  int variables() const { return static_cast<int>(xs_.size() + ys_.size()); }

  std::vector<Scalar> piece(unsigned mask) {
    const int p = static_cast<int>(xs_.size());
    const int n = g_.dim();
    std::vector<Scalar> out(n);
    if (std::popcount(mask) == 1) {
      int u = std::countr_zero(mask);
      out[u < p ? xs_[u] : ys_[u - p]] = 1;
      return out;
    }
    unsigned tmask = mask & ((1u << p) - 1);
    unsigned smask = mask >> p;
    if (tmask == 0) return out;
    // The final ξ takes one t-variable; the word's letters take the rest.
    for (unsigned rest = tmask; rest; rest &= rest - 1) {
      int u = std::countr_zero(rest);
      std::vector<Scalar> v(n);
      v[xs_[u]] = 1;
      std::string suffix;
      extend(tmask & ~(1u << u), smask, v, suffix, out);
    }
    return out;
  }

 private:
  // Applies letters right to left until every variable is used.
  void extend(unsigned tmask, unsigned smask, const std::vector<Scalar>& v, std::string& suffix,
              std::vector<Scalar>& out) {
    if (std::all_of(v.begin(), v.end(), [](const Scalar& c) { return is_zero(c); })) return;
    if (tmask == 0 && smask == 0) {
      std::string word(suffix.rbegin(), suffix.rend());
      const Scalar& c = coefficient(word);
      if (is_zero(c)) return;
      for (std::size_t i = 0; i < v.size(); ++i) out[i] += c * v[i];
      return;
    }
    const int n = g_.dim();
    auto step = [&](int basis, char letter, unsigned nt, unsigned ns) {
      std::vector<Scalar> e(n);
      e[basis] = 1;
      suffix.push_back(letter);
      extend(nt, ns, g_.bracket(e, v), suffix, out);
      suffix.pop_back();
    };
    for (unsigned rest = tmask; rest; rest &= rest - 1) {
      int u = std::countr_zero(rest);
      step(xs_[u], 'X', tmask & ~(1u << u), smask);
    }
    for (unsigned rest = smask; rest; rest &= rest - 1) {
      int u = std::countr_zero(rest);
      step(ys_[u], 'Y', tmask, smask & ~(1u << u));
    }
  }

  const Scalar& coefficient(const std::string& word) {
    auto it = coeff_.find(word);
    if (it == coeff_.end()) it = coeff_.emplace(word, bch_coefficient(word)).first;
    return it->second;
  }

  const LieAlgebra& g_;
  std::vector<int> xs_, ys_;
  std::map<std::string, Scalar> coeff_;
};

std::vector<int> letters_of(const Monomial& m) {
  std::vector<int> out;
  for (auto [i, e] : m.factors()) out.insert(out.end(), e, i);
  return out;
}

// Adds c * sum_{r <= order} λ^r B_r(x^a, x^b) into acc.
void star_monomials(const LieAlgebra& g, const Monomial& a, const Monomial& b, const Scalar& c, int order,
                    std::vector<Polynomial>& acc) {
  PolarizedBCH h(g, letters_of(a), letters_of(b));
  const int nv = h.variables();
  const unsigned full = (1u << nv) - 1;
  const int top = std::min(order, std::max(0, nv - 1));
  // Linear form <x, H_B> for every block B that can appear.
  std::vector<Polynomial> form(full + 1);
  for (unsigned mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) - 1 > top) continue;
    auto v = h.piece(mask);
    for (int i = 0; i < g.dim(); ++i) form[mask].add_term(Monomial::variable(i), v[i]);
  }
  // F[mask][r]: sum over set partitions of mask with sum (|B| - 1) = r of
  // prod <x, H_B>, by always splitting off the block holding the lowest bit.
  std::vector<std::vector<Polynomial>> F(full + 1, std::vector<Polynomial>(top + 1));
  F[0][0] = Polynomial(1);
  for (unsigned mask = 1; mask <= full; ++mask) {
    unsigned low = mask & (~mask + 1);
    unsigned others = mask & ~low;
    for (unsigned sub = others;; sub = (sub - 1) & others) {
      unsigned block = sub | low;
      int cost = std::popcount(block) - 1;
      if (cost <= top && !form[block].is_zero()) {
        for (int r = cost; r <= top; ++r) {
          const Polynomial& rest = F[mask & ~block][r - cost];
          if (!rest.is_zero()) F[mask][r] += form[block] * rest;
        }
      }
      if (sub == 0) break;
    }
  }
  for (int r = 0; r <= top; ++r) acc[r] += F[full][r] * c;
}

void check_caps(const Polynomial& f, const Polynomial& h, const GuttOptions& options) {
  if (f.degree() > options.degree_cap || h.degree() > options.degree_cap) {
    throw CapExceeded("factor degree exceeds the cap " + std::to_string(options.degree_cap));
  }
}

}  // namespace

StarProduct gutt_star(const LieAlgebra& g, const Polynomial& f, const Polynomial& h, int order,
                      const GuttOptions& options) {
  if (order < 0) throw std::invalid_argument("negative star-product order");
  check_caps(f, h, options);
  const int needed = std::max(0, std::max(f.degree(), 0) + std::max(h.degree(), 0) - 1);
  if (std::min(order, needed) > options.bch_order_cap) {
    throw CapExceeded("star product needs BCH order " + std::to_string(std::min(order, needed)) +
                      " beyond the cap " + std::to_string(options.bch_order_cap));
  }
  StarProduct out;
  out.coefficients.resize(order + 1);
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : h.terms()) star_monomials(g, a, b, ca * cb, order, out.coefficients);
  }
  return out;
}

Polynomial gutt_star_at_one(const LieAlgebra& g, const Polynomial& f, const Polynomial& h,
                            const GuttOptions& options) {
  const int order = std::max(0, std::max(f.degree(), 0) + std::max(h.degree(), 0) - 1);
  return gutt_star(g, f, h, order, options).at_one();
}

}  // namespace defq
