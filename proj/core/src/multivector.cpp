#include "defq/multivector.hpp"

#include <algorithm>
#include <stdexcept>

namespace defq {

int canonicalize_blade(Blade& indices) {
  int sign = 1;
  for (std::size_t i = 1; i < indices.size(); ++i) {
    for (std::size_t j = i; j > 0 && indices[j - 1] >= indices[j]; --j) {
      if (indices[j - 1] == indices[j]) return 0;
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
    }
  }
  return sign;
}

PolyMultiVector::PolyMultiVector(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 0 || degree < 0) throw std::invalid_argument("negative multivector dimension or degree");
}

PolyMultiVector PolyMultiVector::function(int dim, const Polynomial& f) {
  PolyMultiVector out(dim, 0);
  out.add_term({}, f);
  return out;
}

PolyMultiVector PolyMultiVector::blade(int dim, Blade indices, const Polynomial& coeff) {
  PolyMultiVector out(dim, static_cast<int>(indices.size()));
  out.add_term(std::move(indices), coeff);
  return out;
}

std::size_t PolyMultiVector::size() const {
  std::size_t n = 0;
  for (const auto& [b, f] : terms_) n += f.size();
  return n;
}

int PolyMultiVector::poly_degree() const {
  int d = kZeroDegree;
  for (const auto& [b, f] : terms_) d = std::max(d, f.degree());
  return d;
}

bool PolyMultiVector::is_homogeneous(int l) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [l](const auto& t) { return t.second.is_homogeneous(l); });
}

PolyMultiVector PolyMultiVector::component(int l) const {
  PolyMultiVector out(dim_, degree_);
  for (const auto& [b, f] : terms_) {
    Polynomial c = f.component(l);
    if (!c.is_zero()) out.terms_.emplace(b, std::move(c));
  }
  return out;
}

Polynomial PolyMultiVector::coefficient(const Blade& sorted) const {
  auto it = terms_.find(sorted);
  return it == terms_.end() ? Polynomial() : it->second;
}

void PolyMultiVector::add_term(Blade indices, const Polynomial& coeff) {
  if (static_cast<int>(indices.size()) != degree_) throw std::invalid_argument("blade length differs from degree");
  for (int i : indices) {
    if (i < 0 || i >= dim_) throw std::out_of_range("blade index outside the ambient dimension");
  }
  if (coeff.is_zero()) return;
  int sign = canonicalize_blade(indices);
  if (sign == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(indices));
  if (sign > 0) {
    it->second += coeff;
  } else {
    it->second -= coeff;
  }
  if (it->second.is_zero()) terms_.erase(it);
}

void PolyMultiVector::add_term(Blade indices, const Monomial& m, const Scalar& c) {
  add_term(std::move(indices), Polynomial(m, c));
}

void PolyMultiVector::check_compatible(const PolyMultiVector& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("multivectors on different spaces");
  if (other.degree_ != degree_ && !is_zero() && !other.is_zero()) {
    throw std::invalid_argument("sum of multivectors of different degree");
  }
}

PolyMultiVector& PolyMultiVector::operator+=(const PolyMultiVector& other) {
  check_compatible(other);
  if (other.is_zero()) return *this;
  if (is_zero()) degree_ = other.degree_;
  for (const auto& [b, f] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(b);
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

PolyMultiVector& PolyMultiVector::operator-=(const PolyMultiVector& other) {
  return *this += -other;
}

PolyMultiVector& PolyMultiVector::operator*=(const Scalar& s) {
  if (defq::is_zero(s)) {
    terms_.clear();
  } else {
    for (auto& [b, f] : terms_) f *= s;
  }
  return *this;
}

PolyMultiVector PolyMultiVector::operator-() const {
  PolyMultiVector out = *this;
  for (auto& [b, f] : out.terms_) f = -f;
  return out;
}

PolyMultiVector PolyMultiVector::times(const Polynomial& f) const {
  PolyMultiVector out(dim_, degree_);
  for (const auto& [b, g] : terms_) {
    Polynomial h = g * f;
    if (!h.is_zero()) out.terms_.emplace(b, std::move(h));
  }
  return out;
}

PolyMultiVector wedge(const PolyMultiVector& u, const PolyMultiVector& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("wedge of multivectors on different spaces");
  PolyMultiVector out(u.dim(), u.degree() + v.degree());
  if (out.degree() > out.dim()) return out;
  for (const auto& [a, f] : u.terms()) {
    for (const auto& [b, g] : v.terms()) {
      Blade c = a;
      c.insert(c.end(), b.begin(), b.end());
      int sign = canonicalize_blade(c);
      if (sign == 0) continue;
      Polynomial h = f * g;
      if (sign < 0) h = -h;
      out.add_term(std::move(c), h);
    }
  }
  return out;
}

PolyMultiVector lie_derivative(const Polynomial& f, int i, const PolyMultiVector& q) {
  PolyMultiVector out(q.dim(), q.degree());
  std::vector<Polynomial> df(q.dim());
  for (int k = 0; k < q.dim(); ++k) df[k] = f.derivative(k);
  for (const auto& [blade, g] : q.terms()) {
    out.add_term(blade, f * g.derivative(i));
    // [f d_i, d_k] = -(d_k f) d_i replaces slot m.
    for (std::size_t m = 0; m < blade.size(); ++m) {
      const Polynomial& d = df[blade[m]];
      if (d.is_zero()) continue;
      Blade b = blade;
      b[m] = i;
      out.add_term(std::move(b), -(g * d));
    }
  }
  return out;
}

namespace {

PolyMultiVector schouten_positive(const PolyMultiVector& p, const PolyMultiVector& q) {
  const int n = p.dim();
  const int pd = p.degree();
  PolyMultiVector out(n, pd + q.degree() - 1);
  if (out.degree() > n) return out;
  const Polynomial one(1);
  for (const auto& [blade, f] : p.terms()) {
    // f d_{i_1} ^ ... ^ d_{i_p} = X_1 ^ ... ^ X_p with X_1 = f d_{i_1}, X_j = d_{i_j}.
    for (int j = 0; j < pd; ++j) {
      const bool first = j == 0;
      PolyMultiVector lq = first ? lie_derivative(f, blade[0], q) : lie_derivative(one, blade[j], q);
      if (lq.is_zero()) continue;
      Blade rest = blade;
      rest.erase(rest.begin() + j);
      PolyMultiVector left = PolyMultiVector::blade(n, rest, first ? one : f);
      PolyMultiVector term = wedge(left, lq);
      // (-1)^{j+p} with j counted from 1.
      if ((j + 1 + pd) % 2 != 0) term = -term;
      out += term;
    }
  }
  return out;
}

}  // namespace

PolyMultiVector schouten(const PolyMultiVector& p, const PolyMultiVector& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("Schouten bracket of multivectors on different spaces");
  if (p.degree() == 0 && q.degree() == 0) return PolyMultiVector(p.dim(), 0);
  if (p.degree() == 0) {
    PolyMultiVector r = schouten_positive(q, p);
    return q.degree() % 2 == 0 ? r : -r;
  }
  return schouten_positive(p, q);
}

namespace {

// Full antisymmetric coefficient matrix of a bivector.
std::vector<Polynomial> bivector_matrix(const PolyMultiVector& p) {
  if (p.degree() != 2) throw std::invalid_argument("expected a bivector");
  const int n = p.dim();
  std::vector<Polynomial> m(n * n);
  for (const auto& [b, f] : p.terms()) {
    m[b[0] * n + b[1]] = f;
    m[b[1] * n + b[0]] = -f;
  }
  return m;
}

}  // namespace

// Fixed by [d1^d2, x1 d1^d3] = d1^d2^d3, where the raw display sums to 6 d1^d2^d3.
const Scalar kBivectorBivectorCalibration = Scalar(1, 6);

PolyMultiVector schouten_bivector_bivector(const PolyMultiVector& p, const PolyMultiVector& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("Schouten bracket of multivectors on different spaces");
  const int n = p.dim();
  auto P = bivector_matrix(p);
  auto Q = bivector_matrix(q);
  // dP[h][a*n+b] = d_h P^{ab}
  std::vector<std::vector<Polynomial>> dP(n), dQ(n);
  for (int h = 0; h < n; ++h) {
    dP[h].resize(n * n);
    dQ[h].resize(n * n);
    for (int a = 0; a < n * n; ++a) {
      dP[h][a] = P[a].derivative(h);
      dQ[h][a] = Q[a].derivative(h);
    }
  }
  PolyMultiVector out(n, 3);
  if (n < 3) return out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        Polynomial t;
        for (int h = 0; h < n; ++h) {
          t += P[i * n + h] * dQ[h][j * n + k] + P[k * n + h] * dQ[h][i * n + j] +
               P[j * n + h] * dQ[h][k * n + i] + Q[i * n + h] * dP[h][j * n + k] +
               Q[k * n + h] * dP[h][i * n + j] + Q[j * n + h] * dP[h][k * n + i];
        }
        out.add_term({i, j, k}, t);
      }
    }
  }
  return out * kBivectorBivectorCalibration;
}

PolyMultiVector schouten_bivector_vector(const PolyMultiVector& p, const PolyMultiVector& a) {
  if (a.degree() != 1 || p.dim() != a.dim()) throw std::invalid_argument("expected a vector field on the same space");
  const int n = p.dim();
  auto P = bivector_matrix(p);
  std::vector<Polynomial> A(n);
  for (const auto& [b, f] : a.terms()) A[b[0]] = f;
  PolyMultiVector out(n, 2);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Polynomial t;
      for (int k = 0; k < n; ++k) {
        t += P[i * n + k] * A[j].derivative(k) + P[k * n + j] * A[i].derivative(k) -
             A[k] * P[i * n + j].derivative(k);
      }
      out.add_term({i, j}, t);
    }
  }
  return out * Scalar(1, 2);
}

PolyMultiVector linear_poisson(const LieAlgebra& g) {
  const int n = g.dim();
  PolyMultiVector out(n, 2);
  for (const auto& [key, c] : g.upper_constants()) {
    auto [i, j, k] = key;
    out.add_term({i, j}, Monomial::variable(k), c);
  }
  return out;
}

std::optional<MultivectorWitness> first_nonzero(const PolyMultiVector& v) {
  if (v.is_zero()) return std::nullopt;
  const auto& [b, f] = *v.terms().begin();
  const auto& [m, c] = *f.terms().begin();
  return MultivectorWitness{b, m, c};
}

PoissonCheck is_poisson(const PolyMultiVector& p) {
  if (p.degree() != 2) throw std::invalid_argument("is_poisson expects a bivector");
  PoissonCheck out;
  out.witness = first_nonzero(schouten(p, p));
  out.poisson = !out.witness.has_value();
  return out;
}

FormalBivectorSeries deformation_of(const LieAlgebra& g, std::vector<PolyMultiVector> higher) {
  FormalBivectorSeries s;
  s.terms.push_back(linear_poisson(g));
  for (auto& p : higher) {
    if (p.degree() != 2 || p.dim() != g.dim()) throw std::invalid_argument("series terms must be bivectors on g*");
    s.terms.push_back(std::move(p));
  }
  return s;
}

FormalPoissonReport is_formal_poisson(const FormalBivectorSeries& s) {
  FormalPoissonReport report;
  const int t = s.truncation();
  if (t < 0) return report;
  const int n = s.terms.front().dim();
  for (int a = 0; a <= 2 * t; ++a) {
    PolyMultiVector sum(n, 3);
    for (int b = std::max(0, a - t); b <= std::min(a, t); ++b) sum += schouten(s.terms[b], s.terms[a - b]);
    FormalPoissonOrder order;
    order.order = a;
    order.beyond_truncation = a > t;
    order.witness = first_nonzero(sum);
    order.vanishes = !order.witness.has_value();
    if (!order.beyond_truncation && !order.vanishes) report.formal_poisson = false;
    report.orders.push_back(std::move(order));
  }
  return report;
}

}  // namespace defq
