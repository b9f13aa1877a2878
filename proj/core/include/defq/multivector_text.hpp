#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "defq/multivector.hpp"

namespace defq {

// Text form of polynomial multivectors, e.g.
//
//   2 * x1^2 x3 * d1^d4 - 1/2 * x[h] x[e] * d[q]^d[p] + d2^d3
//
// A term is a product of factors separated by '*' or blanks: at most one
// rational coefficient (p or p/q), any number of variables x<i> or x[name]
// with optional ^exponent, and at most one wedge of d<i> or d[name].
// Indices are 1-based. Terms are joined by '+' or '-'; "0" is the zero
// multivector. Every term must carry the same number of d factors.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at column " + std::to_string(position + 1)), position(position) {}
  std::size_t position;
};

// `names` resolves x[name] / d[name]; `degree` is required to type "0".
PolyMultiVector parse_multivector(std::string_view text, int dim,
                                  const std::vector<std::string>& names = {},
                                  std::optional<int> degree = std::nullopt);
Polynomial parse_polynomial(std::string_view text, int dim, const std::vector<std::string>& names = {});

// Canonical form: terms in blade order then graded-lex monomial order, unit
// coefficients and empty parts omitted. With `names`, variables print as x[name].
std::string format(const PolyMultiVector& v, const std::vector<std::string>* names = nullptr);
std::string format(const Polynomial& f, const std::vector<std::string>* names = nullptr);

}  // namespace defq
