#include "defq/multivector_text.hpp"

#include <cctype>
#include <sstream>

namespace defq {

namespace {

struct Term {
  Scalar coeff = 1;
  Monomial monomial;
  Blade blade;
  bool has_blade = false;
};

class Parser {
 public:
  Parser(std::string_view text, int dim, const std::vector<std::string>& names)
      : text_(text), dim_(dim), names_(names) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip();
    if (at_end()) fail("empty expression");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      Term t = term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return terms;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Term term() {
    Term t;
    bool seen_coeff = false;
    bool any = false;
    while (true) {
      skip();
      if (at_end()) break;
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        if (seen_coeff) fail("second coefficient in a term");
        t.coeff *= number();
        seen_coeff = true;
      } else if (c == 'x') {
        ++pos_;
        int i = index();
        int e = 1;
        if (!at_end() && peek() == '^') {
          ++pos_;
          e = integer();
        }
        t.monomial = t.monomial * Monomial::variable(i, e);
      } else if (c == 'd') {
        if (t.has_blade) fail("second wedge in a term");
        t.has_blade = true;
        ++pos_;
        t.blade.push_back(index());
        while (!at_end() && peek() == '^') {
          ++pos_;
          if (at_end() || peek() != 'd') fail("expected d<i> after '^'");
          ++pos_;
          t.blade.push_back(index());
        }
      } else {
        break;
      }
      any = true;
      skip();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip();
        if (at_end() || peek() == '+' || peek() == '-') fail("dangling '*'");
      }
    }
    if (!any) fail("expected a term");
    return t;
  }

  int integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  Scalar number() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      std::size_t den = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (den == pos_) fail("expected a denominator");
    }
    try {
      return parse_scalar(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument&) {
      pos_ = start;
      fail("bad rational");
    }
  }

  // 0-based index from <digits> (1-based) or [name].
  int index() {
    std::size_t start = pos_;
    int i = -1;
    if (!at_end() && peek() == '[') {
      ++pos_;
      std::size_t name_start = pos_;
      while (!at_end() && peek() != ']') ++pos_;
      if (at_end()) fail("unterminated name");
      std::string name(text_.substr(name_start, pos_ - name_start));
      ++pos_;
      for (std::size_t k = 0; k < names_.size(); ++k) {
        if (names_[k] == name) i = static_cast<int>(k);
      }
      if (i < 0) {
        pos_ = start;
        fail("unknown basis name '" + name + "'");
      }
    } else {
      i = integer() - 1;
    }
    if (i < 0 || i >= dim_) {
      pos_ = start;
      fail("index outside 1.." + std::to_string(dim_));
    }
    return i;
  }

  std::string_view text_;
  int dim_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyMultiVector parse_multivector(std::string_view text, int dim, const std::vector<std::string>& names,
                                  std::optional<int> degree) {
  Parser parser(text, dim, names);
  std::vector<Term> terms = parser.parse();
  std::optional<int> k = degree;
  for (const auto& t : terms) {
    if (is_zero(t.coeff)) continue;
    int tk = static_cast<int>(t.blade.size());
    if (k && *k != tk) throw ParseError("terms of different multivector degree", 0);
    k = tk;
  }
  PolyMultiVector out(dim, k.value_or(0));
  for (const auto& t : terms) {
    if (!is_zero(t.coeff)) out.add_term(t.blade, t.monomial, t.coeff);
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text, int dim, const std::vector<std::string>& names) {
  return parse_multivector(text, dim, names, 0).coefficient({});
}

namespace {

void append_monomial(std::ostringstream& out, const Monomial& m, const std::vector<std::string>* names) {
  bool first = true;
  for (auto [i, e] : m.factors()) {
    if (!first) out << ' ';
    first = false;
    if (names) {
      out << "x[" << (*names)[i] << ']';
    } else {
      out << 'x' << i + 1;
    }
    if (e != 1) out << '^' << e;
  }
}

void append_blade(std::ostringstream& out, const Blade& b, const std::vector<std::string>* names) {
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (k) out << '^';
    if (names) {
      out << "d[" << (*names)[b[k]] << ']';
    } else {
      out << 'd' << b[k] + 1;
    }
  }
}

}  // namespace

std::string format(const PolyMultiVector& v, const std::vector<std::string>* names) {
  if (v.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [b, f] : v.terms()) {
    for (const auto& [m, c] : f.terms()) {
      Scalar a = c;
      if (first) {
        if (a < 0) {
          out << '-';
          a = -a;
        }
      } else {
        out << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      bool unit = a == 1;
      if (!unit) out << to_string(a);
      bool need_sep = !unit;
      if (!m.is_one()) {
        if (need_sep) out << " * ";
        append_monomial(out, m, names);
        need_sep = true;
      }
      if (!b.empty()) {
        if (need_sep) out << " * ";
        append_blade(out, b, names);
        need_sep = true;
      }
      if (!need_sep) out << '1';
    }
  }
  return out.str();
}

std::string format(const Polynomial& f, const std::vector<std::string>* names) {
  int dim = 0;
  for (const auto& [m, c] : f.terms()) {
    for (auto [i, e] : m.factors()) dim = std::max(dim, i + 1);
  }
  return format(PolyMultiVector::function(dim, f), names);
}

}  // namespace defq
