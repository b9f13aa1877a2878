#include "defq/cohomology.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace defq {

std::vector<Monomial> monomials_of_degree(int n, int l) {
  std::vector<Monomial> out;
  if (l < 0) return out;
  if (n == 0) {
    if (l == 0) out.emplace_back();
    return out;
  }
  std::vector<int> e(n, 0);
  // Enumerate compositions of l into n parts.
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      e[pos] = left;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[pos] = a;
      self(self, pos + 1, left - a);
    }
  };
  rec(rec, 0, l);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void subsets(const std::vector<int>& from, int k, std::vector<Blade>& out) {
  Blade cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < from.size(); ++i) {
      cur.push_back(from[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

GradedSlice::GradedSlice(int dim, std::vector<int> acting, int k, int l) : ambient_(dim), k_(k), l_(l) {
  std::sort(acting.begin(), acting.end());
  if (k >= 0 && k <= static_cast<int>(acting.size())) subsets(acting, k, blades_);
  monomials_ = monomials_of_degree(dim, l);
  for (std::size_t i = 0; i < blades_.size(); ++i) blade_index_.emplace(blades_[i], static_cast<int>(i));
  for (std::size_t i = 0; i < monomials_.size(); ++i) monomial_index_.emplace(monomials_[i], static_cast<int>(i));
}

int GradedSlice::index(const Blade& b, const Monomial& m) const {
  auto bi = blade_index_.find(b);
  if (bi == blade_index_.end()) return -1;
  auto mi = monomial_index_.find(m);
  if (mi == monomial_index_.end()) return -1;
  return bi->second * static_cast<int>(monomials_.size()) + mi->second;
}

Cochain GradedSlice::element(int index) const {
  const int nm = static_cast<int>(monomials_.size());
  return Cochain::blade(ambient_, blades_[index / nm], Polynomial(monomials_[index % nm], Scalar(1)));
}

SparseVec GradedSlice::coordinates(const Cochain& phi) const {
  SparseVec out;
  for (const auto& [b, f] : phi.terms()) {
    for (const auto& [m, c] : f.terms()) {
      int i = index(b, m);
      if (i < 0) throw std::invalid_argument("cochain has a term outside the slice");
      out.emplace_back(i, c);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

Cochain GradedSlice::cochain(const SparseVec& v) const {
  Cochain out(ambient_, k_);
  const int nm = static_cast<int>(monomials_.size());
  for (const auto& [i, c] : v) out.add_term(blades_[i / nm], monomials_[i % nm], c);
  return out;
}

CEComplex::CEComplex(LieAlgebra g) : CEComplex(g, [&] {
  std::vector<int> all(g.dim());
  for (int i = 0; i < g.dim(); ++i) all[i] = i;
  return all;
}()) {}

CEComplex::CEComplex(LieAlgebra g, std::vector<int> acting) : g_(std::move(g)), acting_(std::move(acting)) {
  std::sort(acting_.begin(), acting_.end());
  acting_.erase(std::unique(acting_.begin(), acting_.end()), acting_.end());
  for (int i : acting_) {
    if (i < 0 || i >= g_.dim()) throw std::out_of_range("acting index outside the algebra");
  }
  if (!g_.is_subalgebra(acting_)) throw NotASubalgebra("acting indices do not span a subalgebra");
  d_dual_.resize(g_.dim());
  for (std::size_t a = 0; a < acting_.size(); ++a) {
    for (std::size_t b = a + 1; b < acting_.size(); ++b) {
      for (const auto& [i, c] : g_.bracket(acting_[a], acting_[b])) {
        d_dual_[i].emplace_back(acting_[a], acting_[b], c);
      }
    }
  }
}

namespace {

// {x_i, f} = sum_k (sum_j C^j_ik x_j) d_k f
Polynomial poisson_with_variable(const LieAlgebra& g, int i, const Polynomial& f) {
  Polynomial out;
  for (int k = 0; k < g.dim(); ++k) {
    const LieVector& br = g.bracket(i, k);
    if (br.empty()) continue;
    Polynomial d = f.derivative(k);
    if (d.is_zero()) continue;
    Polynomial lin;
    for (const auto& [j, c] : br) lin.add_term(Monomial::variable(j), c);
    out += lin * d;
  }
  return out;
}

}  // namespace

Cochain CEComplex::diff(const Cochain& phi) const {
  Cochain out(phi.dim(), phi.degree() + 1);
  for (const auto& [blade, f] : phi.terms()) {
    for (int i : acting_) {
      if (std::binary_search(blade.begin(), blade.end(), i)) continue;
      Polynomial gi = poisson_with_variable(g_, i, f);
      if (gi.is_zero()) continue;
      Blade b{i};
      b.insert(b.end(), blade.begin(), blade.end());
      out.add_term(std::move(b), gi);
    }
    for (std::size_t m = 0; m < blade.size(); ++m) {
      Blade rest = blade;
      rest.erase(rest.begin() + m);
      for (const auto& [k, l, c] : d_dual_[blade[m]]) {
        Blade b{k, l};
        b.insert(b.end(), rest.begin(), rest.end());
        Scalar s = m % 2 == 0 ? Scalar(-c) : c;
        out.add_term(std::move(b), f * Polynomial(s));
      }
    }
  }
  return out;
}

std::vector<SparseVec> CEComplex::diff_columns(const GradedSlice& from, const GradedSlice& to) const {
  std::vector<SparseVec> cols(from.dim());
  for (int j = 0; j < from.dim(); ++j) cols[j] = to.coordinates(diff(from.element(j)));
  return cols;
}

std::vector<SparseVec> CEComplex::diff_columns(int k, int l) const {
  return diff_columns(slice(k, l), slice(k + 1, l));
}

int CEComplex::rank_diff(int k, int l) const {
  if (k < 0 || k >= static_cast<int>(acting_.size())) return 0;
  GradedSlice to = slice(k + 1, l);
  return rank(diff_columns(slice(k, l), to), to.dim());
}

int CEComplex::cohomology_dim(int k, int l) const {
  if (k < 0 || k > static_cast<int>(acting_.size()) || l < 0) return 0;
  return slice(k, l).dim() - rank_diff(k, l) - rank_diff(k - 1, l);
}

std::vector<Cochain> CEComplex::cocycle_basis(int k, int l) const {
  GradedSlice from = slice(k, l);
  GradedSlice to = slice(k + 1, l);
  std::vector<Cochain> out;
  for (const auto& v : kernel(diff_columns(from, to), to.dim())) out.push_back(from.cochain(v));
  return out;
}

std::vector<Cochain> CEComplex::cohomology_basis(int k, int l) const {
  GradedSlice here = slice(k, l);
  Echelon span(here.dim());
  if (k > 0) {
    for (auto& col : diff_columns(slice(k - 1, l), here)) span.insert(std::move(col));
  }
  std::vector<Cochain> out;
  for (auto& z : cocycle_basis(k, l)) {
    const int before = span.rank();
    span.insert(here.coordinates(z));
    if (span.rank() > before) out.push_back(std::move(z));
  }
  return out;
}

namespace {

CoboundaryResult solve_in_slice(const GradedSlice& target, const std::vector<Cochain>& sources,
                                const std::vector<SparseVec>& images, const Cochain& phi) {
  CoboundaryResult res;
  res.k = target.k();
  res.l = target.l();
  SparseVec b = target.coordinates(phi);
  SolveResult s = solve(images, b, target.dim());
  if (s.feasible) {
    Cochain prim(phi.dim(), std::max(0, phi.degree() - 1));
    for (const auto& [j, c] : s.x) prim += sources[j] * c;
    res.primitive = std::move(prim);
  } else {
    res.certificate = std::move(s.certificate);
  }
  return res;
}

}  // namespace

CoboundaryResult CEComplex::is_coboundary(const Cochain& phi) const {
  if (!diff(phi).is_zero()) throw NotACocycleError("cochain is not a cocycle");
  const int k = phi.degree();
  const int l = phi.is_zero() ? 0 : phi.poly_degree();
  if (!phi.is_homogeneous(l)) throw std::invalid_argument("cochain must be homogeneous in polynomial degree");
  GradedSlice target = slice(k, l);
  if (k == 0) {
    CoboundaryResult res;
    res.k = 0;
    res.l = l;
    if (phi.is_zero()) {
      res.primitive = Cochain(phi.dim(), 0);
    } else {
      SparseVec b = target.coordinates(phi);
      res.certificate = {{b.front().first, Scalar(1)}};
    }
    return res;
  }
  GradedSlice source = slice(k - 1, l);
  std::vector<Cochain> sources;
  for (int j = 0; j < source.dim(); ++j) sources.push_back(source.element(j));
  return solve_in_slice(target, sources, diff_columns(source, target), phi);
}

void CEComplex::check_b(const std::vector<int>& b) const {
  for (int x : b) {
    if (x < 0 || x >= g_.dim()) throw std::out_of_range("subalgebra index outside the algebra");
  }
  if (!g_.is_subalgebra(b)) throw NotASubalgebra("indices do not span a subalgebra");
  std::set<int> h(acting_.begin(), acting_.end());
  for (int x : b) {
    for (int k : acting_) {
      for (const auto& [i, c] : g_.bracket(x, k)) {
        if (!h.count(i)) throw NotAnIdeal("b does not normalize the acting subalgebra");
      }
    }
  }
}

Cochain CEComplex::act(int x, const Cochain& phi) const {
  Cochain out(phi.dim(), phi.degree());
  for (const auto& [blade, f] : phi.terms()) {
    out.add_term(blade, poisson_with_variable(g_, x, f));
    // x . e^i = -sum_k C^i_xk e^k
    for (std::size_t m = 0; m < blade.size(); ++m) {
      for (int k : acting_) {
        Scalar c = g_.constant(x, k, blade[m]);
        if (is_zero(c)) continue;
        Blade b = blade;
        b[m] = k;
        out.add_term(std::move(b), f * Polynomial(Scalar(-c)));
      }
    }
  }
  return out;
}

std::vector<Cochain> CEComplex::invariant_slice(const std::vector<int>& b, int k, int l) const {
  check_b(b);
  GradedSlice s = slice(k, l);
  std::vector<Cochain> out;
  if (b.empty()) {
    for (int j = 0; j < s.dim(); ++j) out.push_back(s.element(j));
    return out;
  }
  const int d = s.dim();
  std::vector<SparseVec> cols(d);
  for (int j = 0; j < d; ++j) {
    Cochain e = s.element(j);
    for (std::size_t a = 0; a < b.size(); ++a) {
      for (auto [i, c] : s.coordinates(act(b[a], e))) cols[j].emplace_back(static_cast<int>(a) * d + i, c);
    }
  }
  for (const auto& v : kernel(cols, d * static_cast<int>(b.size()))) out.push_back(s.cochain(v));
  return out;
}

namespace {

int rank_of_images(const CEComplex& cx, const std::vector<Cochain>& sources, const GradedSlice& to) {
  std::vector<SparseVec> cols;
  cols.reserve(sources.size());
  for (const auto& c : sources) cols.push_back(to.coordinates(cx.diff(c)));
  return rank(cols, to.dim());
}

}  // namespace

int CEComplex::invariant_cohomology_dim(const std::vector<int>& b, int k, int l) const {
  const int h = static_cast<int>(acting_.size());
  if (k < 0 || k > h || l < 0) return 0;
  auto vk = invariant_slice(b, k, l);
  int r_out = k < h ? rank_of_images(*this, vk, slice(k + 1, l)) : 0;
  int r_in = k > 0 ? rank_of_images(*this, invariant_slice(b, k - 1, l), slice(k, l)) : 0;
  return static_cast<int>(vk.size()) - r_out - r_in;
}

CoboundaryResult CEComplex::is_invariant_coboundary(const std::vector<int>& b, const Cochain& phi) const {
  if (!diff(phi).is_zero()) throw NotACocycleError("cochain is not a cocycle");
  const int k = phi.degree();
  const int l = phi.is_zero() ? 0 : phi.poly_degree();
  if (k == 0) return is_coboundary(phi);
  GradedSlice target = slice(k, l);
  auto sources = invariant_slice(b, k - 1, l);
  std::vector<SparseVec> images;
  for (const auto& c : sources) images.push_back(target.coordinates(diff(c)));
  return solve_in_slice(target, sources, images, phi);
}

Cochain ce_diff(const LieAlgebra& g, const Cochain& phi) { return CEComplex(g).diff(phi); }

Cochain ce_diff_schouten(const LieAlgebra& g, const Cochain& phi) {
  return schouten(linear_poisson(g), phi);
}

int cohomology_dim(const LieAlgebra& g, int k, int l) { return CEComplex(g).cohomology_dim(k, l); }

std::map<std::pair<int, int>, int> cohomology_table(const LieAlgebra& g, const std::vector<int>& ks,
                                                    const std::vector<int>& ls, int jobs) {
  std::vector<std::pair<int, int>> keys;
  for (int k : ks) {
    for (int l : ls) keys.emplace_back(k, l);
  }
  std::vector<int> values(keys.size());
  const CEComplex cx(g);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < keys.size();) values[i] = cx.cohomology_dim(keys[i].first, keys[i].second);
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(keys.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::map<std::pair<int, int>, int> out;
  for (std::size_t i = 0; i < keys.size(); ++i) out[keys[i]] = values[i];
  return out;
}

CoboundaryResult is_coboundary(const LieAlgebra& g, const Cochain& phi) { return CEComplex(g).is_coboundary(phi); }

CEComplex subcomplex_restrict(const LieAlgebra& g, const std::vector<int>& ideal) {
  for (int i : ideal) {
    if (i < 0 || i >= g.dim()) throw std::out_of_range("ideal index outside the algebra");
  }
  if (!g.is_ideal(ideal)) throw NotAnIdeal("indices do not span an ideal");
  return CEComplex(g, ideal);
}

LieAlgebra subalgebra(const LieAlgebra& g, const std::vector<int>& indices) {
  if (!g.is_subalgebra(indices)) throw NotASubalgebra("indices do not span a subalgebra");
  std::vector<int> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> pos(g.dim(), -1);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    pos[sorted[a]] = static_cast<int>(a);
    names.push_back(g.basis_names()[sorted[a]]);
  }
  LieAlgebra::ConstantMap upper;
  for (const auto& [key, c] : g.upper_constants()) {
    auto [i, j, k] = key;
    if (pos[i] >= 0 && pos[j] >= 0) upper.emplace(std::make_tuple(pos[i], pos[j], pos[k]), c);
  }
  return LieAlgebra::from_upper(g.name() + "|sub", names, upper);
}

bool HochschildSerreReport::all_equal() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.equal(); });
}

HochschildSerreReport hochschild_serre_check(const LieAlgebra& g, const std::vector<int>& b,
                                             const std::vector<int>& n_ideal, int p, int l_max) {
  std::set<int> bs(b.begin(), b.end()), ns(n_ideal.begin(), n_ideal.end());
  if (bs.size() != b.size() || ns.size() != n_ideal.size()) throw std::invalid_argument("repeated index in decomposition");
  for (int i : bs) {
    if (ns.count(i)) throw std::invalid_argument("b and n overlap");
  }
  if (static_cast<int>(bs.size() + ns.size()) != g.dim()) throw std::invalid_argument("b and n do not span g");
  for (int i : bs) {
    if (i < 0 || i >= g.dim()) throw std::out_of_range("index outside the algebra");
  }
  CEComplex nx = subcomplex_restrict(g, n_ideal);
  LieAlgebra ba = subalgebra(g, b);
  CEComplex bx(ba);
  CEComplex gx(g);
  std::vector<int> hb(p + 1);
  for (int i = 0; i <= p; ++i) hb[i] = bx.cohomology_dim(i, 0);
  HochschildSerreReport report;
  report.p = p;
  for (int l = 0; l <= l_max; ++l) {
    HochschildSerreRow row;
    row.l = l;
    row.lhs = gx.cohomology_dim(p, l);
    for (int i = 0; i <= p; ++i) {
      if (hb[i] == 0) continue;
      row.rhs += hb[i] * nx.invariant_cohomology_dim(b, p - i, l);
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace defq
