#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "defq/lie_algebra.hpp"
#include "defq/multivector.hpp"

namespace defq {

// Syntax or schema error in an input file. Syntax errors carry a 1-based
// line and column; schema errors name the offending key path instead.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& source, int line, int column, const std::string& what);
  FormatError(const std::string& source, const std::string& path, const std::string& what);
  int line = 0;
  int column = 0;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parsed but unvalidated algebra file.
struct AlgebraDefinition {
  std::string name;
  std::vector<std::string> basis;
  ConstantTensor tensor;
};

class InvalidAlgebra : public std::invalid_argument {
 public:
  InvalidAlgebra(std::string name, ValidationReport report);
  std::string name;
  ValidationReport report;
};

enum class FileFormat { Toml, Json };

// TOML subset accepted by the readers:
//   key = value lines, [table] and [[array-of-tables]] headers, # comments;
//   values are "strings", integers, true/false, [arrays] (may span lines,
//   trailing comma allowed) and { inline = tables }.
// Repeated keys in one table are errors. The result is the equivalent JSON.
nlohmann::json parse_toml(std::string_view text, const std::string& source = "<toml>");

nlohmann::json parse_document(std::string_view text, FileFormat format, const std::string& source);
// By extension: .json is JSON, anything else TOML.
nlohmann::json read_document(const std::string& path);

// Schema:
//   name     optional string
//   dim      optional integer, must match basis
//   basis    array of distinct strings
//   brackets array of {on = [a, b], out = {c = rational, ...}}
// Rationals are integers or "p/q" strings. A bracket [a, b] given alone
// implies [b, a] = -[a, b]; giving both stores both as written, so validation
// can catch inconsistent data. Each ordered pair may appear at most once.
AlgebraDefinition algebra_from_json(const nlohmann::json& doc, const std::string& source);

// Throws InvalidAlgebra if antisymmetry or Jacobi fails.
LieAlgebra to_lie_algebra(const AlgebraDefinition& def);

// "catalog:<name>" or a path to a TOML/JSON definition.
LieAlgebra load_algebra(const std::string& where);

nlohmann::json algebra_to_json(const LieAlgebra& g);

// Series file: {algebra = "<path or catalog:name>", terms = ["<P_0 text>", "<P_1 text>", ...]}
// in the multivector text format; the term "linear" stands for P_0 of the
// algebra. Relative algebra paths resolve against the series file.
struct SeriesFile {
  LieAlgebra algebra;
  FormalBivectorSeries series;
};

SeriesFile load_series(const std::string& path);

}  // namespace defq
