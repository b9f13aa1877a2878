#include "defq/lie_algebra.hpp"

#include <charconv>

namespace defq {

namespace {

using Bracket = std::tuple<std::string, std::string, std::vector<std::pair<std::string, Scalar>>>;

LieAlgebra by_names(std::string name, std::vector<std::string> basis,
                    const std::vector<Bracket>& brackets) {
  std::vector<std::tuple<int, int, int, Scalar>> constants;
  auto idx = [&](const std::string& s) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i] == s) return static_cast<int>(i);
    }
    throw std::logic_error("catalog typo: " + s);
  };
  for (const auto& [a, b, out] : brackets) {
    for (const auto& [c, v] : out) constants.emplace_back(idx(a), idx(b), idx(c), v);
  }
  return LieAlgebra(std::move(name), std::move(basis), constants);
}

LieAlgebra rename(LieAlgebra g, std::string name) {
  return LieAlgebra::from_upper(std::move(name), g.basis_names(), g.upper_constants());
}

LieAlgebra sl2() {
  return by_names("sl2", {"h", "e", "f"},
                  {{"h", "e", {{"e", 2}}}, {"h", "f", {{"f", -2}}}, {"e", "f", {{"h", 1}}}});
}

LieAlgebra r2() { return by_names("r2", {"X", "Y"}, {{"X", "Y", {{"Y", 1}}}}); }

LieAlgebra n56_part(bool with_torus) {
  std::vector<std::string> basis;
  if (with_torus) basis.push_back("X0");
  for (int i = 1; i <= 5; ++i) basis.push_back("X" + std::to_string(i));
  std::vector<Bracket> br;
  auto x = [](int i) { return "X" + std::to_string(i); };
  if (with_torus) {
    for (int i = 1; i <= 5; ++i) br.push_back({"X0", x(i), {{x(i), i}}});
  }
  for (int i = 2; i <= 4; ++i) br.push_back({"X1", x(i), {{x(i + 1), 1}}});
  br.push_back({"X2", "X3", {{"X5", 1}}});
  return by_names(with_torus ? "t1_n56" : "n56", basis, br);
}

}  // namespace

LieAlgebra gl(int m) {
  if (m < 1) throw std::invalid_argument("gl(m) needs m >= 1");
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  }
  // [E_ij, E_kl] = delta_jk E_il - delta_li E_kj
  std::vector<std::tuple<int, int, int, Scalar>> constants;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        for (int l = 0; l < m; ++l) {
          int a = i * m + j, b = k * m + l;
          if (a >= b) continue;
          if (j == k) constants.emplace_back(a, b, i * m + l, 1);
          if (l == i) constants.emplace_back(a, b, k * m + j, -1);
        }
      }
    }
  }
  return LieAlgebra("gl" + std::to_string(m), names, constants);
}

LieAlgebra glm_km(int m) {
  LieAlgebra a = gl(m);
  ActionMatrices action(m * m, std::vector<Scalar>(m * m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) action[i * m + j][i * m + j] = 1;
  }
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) names.push_back("e" + std::to_string(i + 1));
  return rename(semidirect_sum(a, m, action, names), "glm_km(" + std::to_string(m) + ")");
}

std::vector<std::string> catalog_names() {
  return {"zero",     "k1",       "r2",     "sl2",    "gl2",    "n3",        "n56",
          "t1_n56",   "sl2_x_r2", "sl2_x_sl2", "gl2_x_k2", "sl2_n3", "glm_km(m)", "borel_sl3",
          "k_x_k2_scalar"};
}

LieAlgebra catalog(const std::string& name) {
  if (name == "zero") return LieAlgebra("zero", {}, {});
  if (name == "k1") return LieAlgebra("k1", {"X"}, {});
  if (name == "r2") return r2();
  if (name == "sl2") return sl2();
  if (name == "gl2") return rename(gl(2), "gl2");
  if (name == "n3") return by_names("n3", {"q", "p", "z"}, {{"q", "p", {{"z", 1}}}});
  if (name == "n56") return n56_part(false);
  if (name == "t1_n56") return n56_part(true);
  if (name == "sl2_x_r2") return rename(direct_sum(sl2(), r2()), "sl2_x_r2");
  if (name == "sl2_x_sl2") return rename(direct_sum(sl2(), sl2()), "sl2_x_sl2");
  if (name == "gl2_x_k2") return rename(glm_km(2), "gl2_x_k2");
  if (name == "sl2_n3") {
    return by_names("sl2_n3", {"h", "e", "f", "q", "p", "z"},
                    {{"h", "e", {{"e", 2}}},
                     {"h", "f", {{"f", -2}}},
                     {"e", "f", {{"h", 1}}},
                     {"q", "p", {{"z", 1}}},
                     {"h", "q", {{"q", 1}}},
                     {"h", "p", {{"p", -1}}},
                     {"e", "p", {{"q", 1}}},
                     {"f", "q", {{"p", 1}}}});
  }
  if (name == "borel_sl3") {
    // H1 = E11 - E22, H2 = E22 - E33 acting on E12, E23, E13 by root values.
    return by_names("borel_sl3", {"H1", "H2", "E12", "E23", "E13"},
                    {{"H1", "E12", {{"E12", 2}}},
                     {"H1", "E23", {{"E23", -1}}},
                     {"H1", "E13", {{"E13", 1}}},
                     {"H2", "E12", {{"E12", -1}}},
                     {"H2", "E23", {{"E23", 2}}},
                     {"H2", "E13", {{"E13", 1}}},
                     {"E12", "E23", {{"E13", 1}}}});
  }
  if (name == "k_x_k2_scalar") {
    return by_names("k_x_k2_scalar", {"t", "u1", "u2"},
                    {{"t", "u1", {{"u1", 1}}}, {"t", "u2", {{"u2", 1}}}});
  }
  const std::string prefix = "glm_km(";
  if (name.starts_with(prefix) && name.size() > prefix.size() + 1 && name.back() == ')') {
    int m = 0;
    const char* first = name.data() + prefix.size();
    const char* last = name.data() + name.size() - 1;
    auto [ptr, ec] = std::from_chars(first, last, m);
    if (ec == std::errc() && ptr == last && m >= 1 && m <= 8) return glm_km(m);
  }
  throw UnknownAlgebra("unknown catalog algebra '" + name + "'");
}

}  // namespace defq
