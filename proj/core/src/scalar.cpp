#include "defq/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace defq {

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den))) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  mpz_class numerator(n, 10);
  mpz_class denominator = 1;
  if (slash != std::string_view::npos) {
    std::string d(den);
    if (!d.empty() && d[0] == '+') d.erase(0, 1);
    denominator = mpz_class(d, 10);
  }
  if (denominator == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Scalar value(numerator, denominator);
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

}  // namespace defq
