#include "defq/enveloping.hpp"

#include <algorithm>

namespace defq {

UgElement::UgElement(const Scalar& c) {
  if (!defq::is_zero(c)) terms_.emplace(PBWMonomial{}, c);
}

UgElement::UgElement(PBWMonomial word, const Scalar& c) {
  if (!std::is_sorted(word.begin(), word.end())) throw std::invalid_argument("PBW word must be nondecreasing");
  if (!defq::is_zero(c)) terms_.emplace(std::move(word), c);
}

int UgElement::degree() const {
  return terms_.empty() ? kZeroDegree : static_cast<int>(terms_.rbegin()->first.size());
}

void UgElement::add_term(const PBWMonomial& word, const Scalar& c) {
  if (defq::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(word, c);
  if (!inserted) {
    it->second += c;
    if (defq::is_zero(it->second)) terms_.erase(it);
  }
}

UgElement& UgElement::operator+=(const UgElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

UgElement& UgElement::operator-=(const UgElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

UgElement& UgElement::operator*=(const Scalar& s) {
  if (defq::is_zero(s)) {
    terms_.clear();
  } else {
    for (auto& [w, c] : terms_) c *= s;
  }
  return *this;
}

const UgElement& PBW::times_generator(const PBWMonomial& w, int i) {
  auto key = std::make_pair(w, i);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  UgElement result;
  if (w.empty() || w.back() <= i) {
    PBWMonomial out = w;
    out.push_back(i);
    result = UgElement(std::move(out), Scalar(1));
  } else {
    // w' y_j y_i = (w' y_i) y_j + w' [y_j, y_i] for j > i.
    const int j = w.back();
    PBWMonomial head(w.begin(), w.end() - 1);
    const UgElement first = times_generator(head, i);
    for (const auto& [u, c] : first.terms()) {
      UgElement t = times_generator(u, j);
      result += t * c;
    }
    for (const auto& [k, c] : g_.bracket(j, i)) {
      UgElement t = times_generator(head, k);
      result += t * c;
    }
  }
  return memo_.emplace(std::move(key), std::move(result)).first->second;
}

UgElement PBW::multiply(const UgElement& u, const UgElement& v) {
  UgElement out;
  for (const auto& [word, c] : v.terms()) {
    UgElement cur = u;
    for (int letter : word) {
      UgElement next;
      for (const auto& [w, a] : cur.terms()) {
        UgElement t = times_generator(w, letter);
        next += t * a;
      }
      cur = std::move(next);
    }
    out += cur * c;
  }
  return out;
}

UgElement PBW::word(const std::vector<int>& letters) {
  UgElement cur(Scalar(1));
  for (int letter : letters) {
    if (letter < 0 || letter >= g_.dim()) throw std::out_of_range("generator index outside the algebra");
    UgElement next;
    for (const auto& [w, a] : cur.terms()) {
      UgElement t = times_generator(w, letter);
      next += t * a;
    }
    cur = std::move(next);
  }
  return cur;
}

namespace {

Scalar factorial(int n) {
  Scalar f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

UgElement PBW::symmetrize(const Polynomial& f) {
  UgElement out;
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> letters;
    Scalar mult = 1;
    for (auto [i, e] : m.factors()) {
      letters.insert(letters.end(), e, i);
      mult *= factorial(e);
    }
    // Each distinct arrangement occurs prod(e_i!) times among the d! orders.
    UgElement sum;
    do {
      sum += word(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    out += sum * (c * mult / factorial(m.degree()));
  }
  return out;
}

Polynomial PBW::unsymmetrize(const UgElement& u) {
  Polynomial out;
  UgElement rest = u;
  while (!rest.is_zero()) {
    const std::size_t d = static_cast<std::size_t>(rest.degree());
    Polynomial top;
    for (auto it = rest.terms().rbegin(); it != rest.terms().rend() && it->first.size() == d; ++it) {
      std::vector<int> exps(g_.dim(), 0);
      for (int i : it->first) ++exps[i];
      top.add_term(Monomial::from_exponents(exps), it->second);
    }
    // The top PBW part of ω(x^I) is y_I.
    rest -= symmetrize(top);
    out += top;
  }
  return out;
}

UgElement PBW::adjoint(int x, const UgElement& u) {
  UgElement y = UgElement::generator(x);
  return multiply(y, u) - multiply(u, y);
}

UgElement pbw_multiply(const LieAlgebra& g, const UgElement& u, const UgElement& v) {
  return PBW(g).multiply(u, v);
}

UgElement symmetrize(const LieAlgebra& g, const Polynomial& f) { return PBW(g).symmetrize(f); }

Polynomial unsymmetrize(const LieAlgebra& g, const UgElement& u) { return PBW(g).unsymmetrize(u); }

}  // namespace defq
