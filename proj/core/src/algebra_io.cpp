#include "defq/algebra_io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "defq/multivector_text.hpp"

namespace defq {

FormatError::FormatError(const std::string& source, int line, int column, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line(line),
      column(column) {}

FormatError::FormatError(const std::string& source, const std::string& path, const std::string& what)
    : std::runtime_error(source + ": " + (path.empty() ? "" : path + ": ") + what) {}

InvalidAlgebra::InvalidAlgebra(std::string name, ValidationReport report)
    : std::invalid_argument("algebra '" + name + "' violates " + std::to_string(report.size()) + " identities"),
      name(std::move(name)),
      report(std::move(report)) {}

namespace {

using nlohmann::json;

class TomlReader {
 public:
  TomlReader(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {}

  json parse() {
    json root = json::object();
    json* table = &root;
    while (true) {
      skip_blank_lines();
      if (eof()) break;
      if (peek() == '[') {
        table = header(root);
      } else {
        key_value(*table);
      }
      end_of_line();
    }
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw FormatError(source_, line, col, what);
  }

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }

  void skip_spaces() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) ++pos_;
  }

  void skip_comment() {
    if (peek() == '#') {
      while (!eof() && peek() != '\n') ++pos_;
    }
  }

  // Also the whitespace rule inside arrays, which may span lines.
  void skip_blank_lines() {
    while (!eof()) {
      skip_spaces();
      skip_comment();
      if (peek() != '\n') return;
      ++pos_;
    }
  }

  void end_of_line() {
    skip_spaces();
    skip_comment();
    if (eof()) return;
    if (peek() != '\n') fail("unexpected '" + std::string(1, peek()) + "' after value");
    ++pos_;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string key() {
    skip_spaces();
    if (peek() == '"') return string_value();
    std::size_t start = pos_;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-')) ++pos_;
    if (start == pos_) fail("expected a key");
    return std::string(text_.substr(start, pos_ - start));
  }

  json* header(json& root) {
    expect('[');
    bool array = peek() == '[';
    if (array) ++pos_;
    skip_spaces();
    std::size_t at = pos_;
    std::string name = key();
    skip_spaces();
    expect(']');
    if (array) expect(']');
    if (array) {
      json& slot = root[name];
      if (slot.is_null()) slot = json::array();
      if (!slot.is_array()) {
        pos_ = at;
        fail("'" + name + "' is already a value, not an array of tables");
      }
      slot.push_back(json::object());
      return &slot.back();
    }
    if (root.contains(name)) {
      pos_ = at;
      fail("duplicate table '" + name + "'");
    }
    root[name] = json::object();
    return &root[name];
  }

  void key_value(json& table) {
    std::size_t at = pos_;
    std::string k = key();
    skip_spaces();
    expect('=');
    skip_spaces();
    json v = value();
    if (table.contains(k)) {
      pos_ = at;
      fail("duplicate key '" + k + "'");
    }
    table[k] = std::move(v);
  }

  json value() {
    char c = peek();
    if (c == '"') return string_value();
    if (c == '[') return array_value();
    if (c == '{') return inline_table();
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) return integer_value();
    if (text_.substr(pos_, 4) == "true") {
      pos_ += 4;
      return true;
    }
    if (text_.substr(pos_, 5) == "false") {
      pos_ += 5;
      return false;
    }
    fail("expected a value");
  }

  std::string string_value() {
    expect('"');
    std::string out;
    while (true) {
      if (eof() || peek() == '\n') fail("unterminated string");
      char c = text_[pos_++];
      if (c == '"') return out;
      if (c == '\\') {
        if (eof()) fail("unterminated string");
        char e = text_[pos_++];
        switch (e) {
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          default: --pos_; fail(std::string("unsupported escape '\\") + e + "'");
        }
      } else {
        out += c;
      }
    }
  }

  json integer_value() {
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string digits;
    for (char c : text_.substr(start, pos_ - start)) {
      if (c != '_' && c != '+') digits += c;
    }
    if (digits.empty() || digits == "-") {
      pos_ = start;
      fail("expected an integer");
    }
    if (!eof() && (peek() == '.' || peek() == 'e' || peek() == 'E')) {
      fail("floating-point values are not accepted; write rationals as \"p/q\"");
    }
    try {
      return std::stoll(digits);
    } catch (const std::out_of_range&) {
      // Big integers survive as strings; the rational reader takes them.
      return digits;
    }
  }

  json array_value() {
    expect('[');
    json out = json::array();
    while (true) {
      skip_blank_lines();
      if (peek() == ']') {
        ++pos_;
        return out;
      }
      out.push_back(value());
      skip_blank_lines();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() != ']') fail("expected ',' or ']' in array");
    }
  }

  json inline_table() {
    expect('{');
    json out = json::object();
    skip_spaces();
    if (peek() == '}') {
      ++pos_;
      return out;
    }
    while (true) {
      skip_spaces();
      key_value(out);
      skip_spaces();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect('}');
      return out;
    }
  }

  std::string_view text_;
  std::string source_;
  std::size_t pos_ = 0;
};

Scalar rational_from(const json& v, const std::string& source, const std::string& path) {
  if (v.is_number_integer()) return Scalar(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    try {
      return parse_scalar(v.get<std::string>());
    } catch (const std::exception&) {
      throw FormatError(source, path, "'" + v.get<std::string>() + "' is not a rational");
    }
  }
  throw FormatError(source, path, "expected an integer or a \"p/q\" string");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

nlohmann::json parse_toml(std::string_view text, const std::string& source) {
  return TomlReader(text, source).parse();
}

nlohmann::json parse_document(std::string_view text, FileFormat format, const std::string& source) {
  if (format == FileFormat::Toml) return parse_toml(text, source);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    if (auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
    throw FormatError(source, line, col, what);
  }
}

nlohmann::json read_document(const std::string& path) {
  const std::string text = read_file(path);
  const bool is_json = std::filesystem::path(path).extension() == ".json";
  return parse_document(text, is_json ? FileFormat::Json : FileFormat::Toml, path);
}

AlgebraDefinition algebra_from_json(const nlohmann::json& doc, const std::string& source) {
  if (!doc.is_object()) throw FormatError(source, "", "top level must be a table");
  for (const auto& [k, v] : doc.items()) {
    if (k != "name" && k != "dim" && k != "basis" && k != "brackets") {
      throw FormatError(source, k, "unknown key");
    }
  }
  AlgebraDefinition def;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw FormatError(source, "name", "expected a string");
    def.name = doc["name"].get<std::string>();
  } else {
    def.name = std::filesystem::path(source).stem().string();
  }
  if (!doc.contains("basis") || !doc["basis"].is_array()) {
    throw FormatError(source, "basis", "expected an array of basis names");
  }
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < doc["basis"].size(); ++i) {
    const auto& b = doc["basis"][i];
    const std::string path = "basis[" + std::to_string(i) + "]";
    if (!b.is_string() || b.get<std::string>().empty()) throw FormatError(source, path, "expected a name");
    if (!index.emplace(b.get<std::string>(), static_cast<int>(i)).second) {
      throw FormatError(source, path, "repeated basis name '" + b.get<std::string>() + "'");
    }
    def.basis.push_back(b.get<std::string>());
  }
  const int n = static_cast<int>(def.basis.size());
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() != n) {
      throw FormatError(source, "dim", "dim does not match the " + std::to_string(n) + " basis names");
    }
  }
  def.tensor.dim = n;
  auto lookup = [&](const json& v, const std::string& path) {
    if (!v.is_string()) throw FormatError(source, path, "expected a basis name");
    auto it = index.find(v.get<std::string>());
    if (it == index.end()) throw FormatError(source, path, "unknown basis name '" + v.get<std::string>() + "'");
    return it->second;
  };
  std::set<std::pair<int, int>> seen;
  if (doc.contains("brackets")) {
    const auto& br = doc["brackets"];
    if (!br.is_array()) throw FormatError(source, "brackets", "expected an array");
    for (std::size_t r = 0; r < br.size(); ++r) {
      const std::string path = "brackets[" + std::to_string(r) + "]";
      const auto& entry = br[r];
      if (!entry.is_object()) throw FormatError(source, path, "expected a table");
      for (const auto& [k, v] : entry.items()) {
        if (k != "on" && k != "out") throw FormatError(source, path + "." + k, "unknown key");
      }
      if (!entry.contains("on") || !entry["on"].is_array() || entry["on"].size() != 2) {
        throw FormatError(source, path + ".on", "expected a pair of basis names");
      }
      int i = lookup(entry["on"][0], path + ".on[0]");
      int j = lookup(entry["on"][1], path + ".on[1]");
      if (!seen.emplace(i, j).second) {
        throw FormatError(source, path, "bracket [" + def.basis[i] + ", " + def.basis[j] + "] given twice");
      }
      if (!entry.contains("out") || !entry["out"].is_object()) {
        throw FormatError(source, path + ".out", "expected a table of coefficients");
      }
      for (const auto& [name, coeff] : entry["out"].items()) {
        const std::string cpath = path + ".out." + name;
        int k = lookup(json(name), cpath);
        Scalar c = rational_from(coeff, source, cpath);
        if (!is_zero(c)) def.tensor.entries[{i, j, k}] = c;
      }
    }
  }
  // A bracket given in one orientation only is completed by antisymmetry.
  for (auto [i, j] : seen) {
    if (i == j || seen.count({j, i})) continue;
    for (int k = 0; k < static_cast<int>(def.basis.size()); ++k) {
      auto it = def.tensor.entries.find({i, j, k});
      if (it != def.tensor.entries.end()) def.tensor.entries[{j, i, k}] = -it->second;
    }
  }
  return def;
}

LieAlgebra to_lie_algebra(const AlgebraDefinition& def) {
  ValidationReport report = validate(def.tensor);
  if (!report.empty()) throw InvalidAlgebra(def.name, std::move(report));
  std::vector<std::tuple<int, int, int, Scalar>> constants;
  for (const auto& [key, c] : def.tensor.entries) {
    auto [i, j, k] = key;
    constants.emplace_back(i, j, k, c);
  }
  return LieAlgebra(def.name, def.basis, constants);
}

LieAlgebra load_algebra(const std::string& where) {
  const std::string prefix = "catalog:";
  if (where.rfind(prefix, 0) == 0) return catalog(where.substr(prefix.size()));
  return to_lie_algebra(algebra_from_json(read_document(where), where));
}

nlohmann::json algebra_to_json(const LieAlgebra& g) {
  json out;
  out["name"] = g.name();
  out["dim"] = g.dim();
  out["basis"] = g.basis_names();
  json brackets = json::array();
  for (int i = 0; i < g.dim(); ++i) {
    for (int j = i + 1; j < g.dim(); ++j) {
      if (g.bracket(i, j).empty()) continue;
      json o = json::object();
      for (const auto& [k, c] : g.bracket(i, j)) {
        o[g.basis_names()[k]] = c.get_den() == 1 ? json(c.get_num().get_si()) : json(to_string(c));
      }
      brackets.push_back({{"on", {g.basis_names()[i], g.basis_names()[j]}}, {"out", o}});
    }
  }
  out["brackets"] = brackets;
  return out;
}

SeriesFile load_series(const std::string& path) {
  json doc = read_document(path);
  if (!doc.is_object()) throw FormatError(path, "", "top level must be a table");
  for (const auto& [k, v] : doc.items()) {
    if (k != "algebra" && k != "terms") throw FormatError(path, k, "unknown key");
  }
  if (!doc.contains("algebra") || !doc["algebra"].is_string()) {
    throw FormatError(path, "algebra", "expected an algebra path or catalog:<name>");
  }
  std::string where = doc["algebra"].get<std::string>();
  if (where.rfind("catalog:", 0) != 0 && std::filesystem::path(where).is_relative()) {
    where = (std::filesystem::path(path).parent_path() / where).string();
  }
  SeriesFile out{load_algebra(where), {}};
  if (!doc.contains("terms") || !doc["terms"].is_array() || doc["terms"].empty()) {
    throw FormatError(path, "terms", "expected a nonempty array of bivectors");
  }
  const int n = out.algebra.dim();
  for (std::size_t t = 0; t < doc["terms"].size(); ++t) {
    const auto& v = doc["terms"][t];
    const std::string tpath = "terms[" + std::to_string(t) + "]";
    if (!v.is_string()) throw FormatError(path, tpath, "expected a multivector string");
    const std::string text = v.get<std::string>();
    if (text == "linear") {
      out.series.terms.push_back(linear_poisson(out.algebra));
      continue;
    }
    try {
      out.series.terms.push_back(parse_multivector(text, n, out.algebra.basis_names(), 2));
    } catch (const ParseError& e) {
      throw FormatError(path, tpath, e.what());
    }
    if (out.series.terms.back().degree() != 2) throw FormatError(path, tpath, "expected a bivector");
  }
  return out;
}

}  // namespace defq
