#include <doctest.h>

#include "defq/algebra_io.hpp"
#include "defq/multivector_text.hpp"

using namespace defq;
using nlohmann::json;

namespace {

std::string data(const std::string& rel) { return std::string(DEFQ_DATA_DIR) + "/" + rel; }

template <class F>
FormatError format_error(F&& f) {
  try {
    f();
  } catch (const FormatError& e) {
    return e;
  }
  FAIL("no FormatError");
  return FormatError("", 0, 0, "");
}

}  // namespace

TEST_CASE("TOML subset") {
  json j = parse_toml(R"(
# comment
name = "x"   # trailing
n = 3
big = 123456789012345678901234567890
flag = true
list = [1, 2,
  3,]
inline = { a = 1, b = "two" }

[table]
key = "v\"q"

[[rows]]
x = 1
[[rows]]
x = 2
)");
  CHECK(j["name"] == "x");
  CHECK(j["n"] == 3);
  CHECK(j["big"] == "123456789012345678901234567890");
  CHECK(j["flag"] == true);
  CHECK(j["list"] == json::array({1, 2, 3}));
  CHECK(j["inline"]["b"] == "two");
  CHECK(j["table"]["key"] == "v\"q");
  CHECK(j["rows"].size() == 2);
  CHECK(j["rows"][1]["x"] == 2);
}

TEST_CASE("TOML errors carry positions") {
  auto dup = format_error([] { parse_toml("a = 1\nb = 2\na = 3\n", "f.toml"); });
  CHECK(dup.line == 3);
  CHECK(std::string(dup.what()).find("f.toml:3:") == 0);
  CHECK(format_error([] { parse_toml("x = 1.5\n"); }).line == 1);
  CHECK(format_error([] { parse_toml("x = [1, 2\n"); }).line >= 1);
  CHECK(format_error([] { parse_toml("[t]\nx = 1\n[t]\n"); }).line == 3);
  CHECK(format_error([] { parse_toml("x = \"open\n"); }).line == 1);
}

TEST_CASE("JSON errors carry positions") {
  auto e = format_error([] { parse_document("{\n  \"a\": 1,\n  \"b\": ]\n}", FileFormat::Json, "f.json"); });
  CHECK(e.line == 3);
}

TEST_CASE("algebra files") {
  LieAlgebra sl2 = load_algebra(data("algebras/sl2.toml"));
  CHECK(sl2.upper_constants() == catalog("sl2").upper_constants());
  LieAlgebra t = load_algebra(data("algebras/t1_n56.toml"));
  CHECK(t.upper_constants() == catalog("t1_n56").upper_constants());
  LieAlgebra h = load_algebra(data("algebras/heisenberg.json"));
  CHECK(h.upper_constants() == catalog("n3").upper_constants());
  CHECK(load_algebra(data("algebras/aff1_half.json")).constant(0, 1, 1) == Scalar(1, 2));
  CHECK(load_algebra("catalog:sl2").dim() == 3);

  CHECK_THROWS_AS(load_algebra(data("algebras/not_jacobi.toml")), InvalidAlgebra);
  try {
    load_algebra(data("algebras/not_antisymmetric.toml"));
    FAIL("expected InvalidAlgebra");
  } catch (const InvalidAlgebra& e) {
    REQUIRE(e.report.size() == 1);
    CHECK(e.report[0].kind == AxiomViolation::Kind::Antisymmetry);
  }
  CHECK_THROWS_AS(load_algebra(data("algebras/missing.toml")), IoError);
}

TEST_CASE("algebra schema errors") {
  auto parse = [](const std::string& text) { return algebra_from_json(parse_toml(text, "t"), "t"); };
  CHECK_THROWS_AS(parse("basis = [\"a\", \"a\"]"), FormatError);
  CHECK_THROWS_AS(parse("basis = [\"a\"]\ndim = 2"), FormatError);
  CHECK_THROWS_AS(parse("basis = [\"a\", \"b\"]\nbrackets = [{ on = [\"a\", \"c\"], out = { a = 1 } }]"),
                  FormatError);
  CHECK_THROWS_AS(parse("basis = [\"a\", \"b\"]\nbrackets = [{ on = [\"a\", \"b\"], out = { a = \"1/0\" } }]"),
                  FormatError);
  CHECK_THROWS_AS(parse("basis = [\"a\", \"b\"]\nbrackets = [{ on = [\"a\", \"b\"], out = { a = 1 } },\n"
                        "{ on = [\"a\", \"b\"], out = { b = 1 } }]"),
                  FormatError);
  CHECK_THROWS_AS(parse("basis = [\"a\", \"b\"]\nbrackets = [{ on = [\"a\", \"b\"], into = { a = 1 } }]"),
                  FormatError);
  auto def = parse("basis = [\"a\", \"b\"]\nbrackets = [{ on = [\"a\", \"b\"], out = { b = \"-3/4\" } }]");
  CHECK(def.name == "t");
  CHECK(def.tensor.entries.at({1, 0, 1}) == Scalar(3, 4));
}

TEST_CASE("algebra JSON round trip") {
  for (const char* name : {"sl2", "t1_n56", "borel_sl3", "gl2_x_k2"}) {
    LieAlgebra g = catalog(name);
    json j = algebra_to_json(g);
    LieAlgebra back = to_lie_algebra(algebra_from_json(j, "mem"));
    CHECK(back.basis_names() == g.basis_names());
    CHECK(back.upper_constants() == g.upper_constants());
    CHECK(back.name() == g.name());
  }
}

TEST_CASE("series files") {
  SeriesFile beta = load_series(data("series/t1_n56_beta.toml"));
  CHECK(beta.algebra.name() == "t1_n56");
  REQUIRE(beta.series.terms.size() == 2);
  CHECK(beta.series.terms[0] == linear_poisson(beta.algebra));
  CHECK(format(beta.series.terms[1], &beta.algebra.basis_names()) == "x[X2]^2 * d[X1]^d[X3]");
  SeriesFile cas = load_series(data("series/sl2_n3_casimir.toml"));
  CHECK(cas.algebra.dim() == 6);
}
