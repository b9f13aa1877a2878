#include "defq/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace defq {

Monomial Monomial::variable(int index, int power) {
  Monomial m;
  if (power < 0) throw std::invalid_argument("negative exponent");
  if (power > 0) {
    m.factors_.emplace_back(index, power);
    m.degree_ = power;
  }
  return m;
}

Monomial Monomial::from_exponents(std::span<const int> dense) {
  Monomial m;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] < 0) throw std::invalid_argument("negative exponent");
    if (dense[i] > 0) {
      m.factors_.emplace_back(static_cast<int>(i), dense[i]);
      m.degree_ += dense[i];
    }
  }
  return m;
}

int Monomial::exponent(int index) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{index, 0});
  return (it != factors_.end() && it->first == index) ? it->second : 0;
}

std::vector<int> Monomial::dense(int dim) const {
  std::vector<int> out(dim, 0);
  for (auto [i, e] : factors_) out.at(i) = e;
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

std::optional<std::pair<int, Monomial>> Monomial::derivative(int index) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{index, 0});
  if (it == factors_.end() || it->first != index) return std::nullopt;
  Monomial out = *this;
  auto pos = out.factors_.begin() + (it - factors_.begin());
  int mult = pos->second;
  if (--pos->second == 0) out.factors_.erase(pos);
  --out.degree_;
  return std::make_pair(mult, std::move(out));
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (degree_ != other.degree_) return degree_ <=> other.degree_;
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  for (; a != factors_.end() && b != other.factors_.end(); ++a, ++b) {
    if (a->first != b->first) {
      // The monomial using the earlier variable has the larger dense vector.
      return a->first < b->first ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (a->second != b->second) {
      return a->second > b->second ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

Polynomial::Polynomial(const Scalar& constant) {
  if (!defq::is_zero(constant)) terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(const Monomial& m, const Scalar& coeff) {
  if (!defq::is_zero(coeff)) terms_.emplace(m, coeff);
}

int Polynomial::degree() const {
  int d = kZeroDegree;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [degree](const auto& t) { return t.first.degree() == degree; });
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& coeff) {
  if (defq::is_zero(coeff)) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (defq::is_zero(it->second)) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& factor) {
  if (defq::is_zero(factor)) {
    terms_.clear();
  } else {
    for (auto& [m, c] : terms_) c *= factor;
  }
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial Polynomial::derivative(int index) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    if (auto d = m.derivative(index)) out.add_term(d->second, c * d->first);
  }
  return out;
}

Polynomial Polynomial::component(int degree) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    if (m.degree() == degree) out.terms_.emplace(m, c);
  }
  return out;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  Scalar total = 0;
  for (const auto& [m, c] : terms_) {
    Scalar value = c;
    for (auto [i, e] : m.factors()) {
      for (int k = 0; k < e; ++k) value *= point[i];
    }
    total += value;
  }
  return total;
}

}  // namespace defq
