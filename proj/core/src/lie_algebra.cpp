#include "defq/lie_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace defq {

namespace {

void check_index(int i, int n, const char* what) {
  if (i < 0 || i >= n) {
    throw StructuralError(std::string(what) + " index " + std::to_string(i) + " outside 0.." +
                          std::to_string(n - 1));
  }
}

void check_names(const std::vector<std::string>& names) {
  std::set<std::string> seen;
  for (const auto& s : names) {
    if (s.empty()) throw StructuralError("empty basis name");
    if (!seen.insert(s).second) throw StructuralError("duplicate basis name '" + s + "'");
  }
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_names,
                       const std::vector<std::tuple<int, int, int, Scalar>>& constants)
    : name_(std::move(name)), basis_names_(std::move(basis_names)) {
  check_names(basis_names_);
  const int n = dim();
  std::map<std::tuple<int, int, int>, Scalar> seen_lower;
  for (const auto& [i, j, k, c] : constants) {
    check_index(i, n, "bracket");
    check_index(j, n, "bracket");
    check_index(k, n, "output");
    if (i == j) {
      if (!is_zero(c)) throw StructuralError("nonzero self-bracket of basis element " + std::to_string(i));
      continue;
    }
    if (i < j) {
      upper_[{i, j, k}] += c;
    } else {
      seen_lower[{j, i, k}] += -c;
    }
  }
  for (const auto& [key, c] : seen_lower) {
    auto it = upper_.find(key);
    if (it == upper_.end()) {
      upper_.emplace(key, c);
    } else if (it->second != c) {
      throw StructuralError("bracket given in both orders with inconsistent values");
    }
  }
  std::erase_if(upper_, [](const auto& kv) { return is_zero(kv.second); });
  build_table();
}

LieAlgebra LieAlgebra::from_upper(std::string name, std::vector<std::string> basis_names,
                                  const ConstantMap& upper) {
  LieAlgebra g;
  g.name_ = std::move(name);
  g.basis_names_ = std::move(basis_names);
  check_names(g.basis_names_);
  const int n = g.dim();
  for (const auto& [key, c] : upper) {
    auto [i, j, k] = key;
    check_index(i, n, "bracket");
    check_index(j, n, "bracket");
    check_index(k, n, "output");
    if (i >= j) throw StructuralError("from_upper expects i < j");
    if (!is_zero(c)) g.upper_.emplace(key, c);
  }
  g.build_table();
  return g;
}

void LieAlgebra::build_table() {
  const int n = dim();
  table_.assign(static_cast<std::size_t>(n) * n, {});
  for (const auto& [key, c] : upper_) {
    auto [i, j, k] = key;
    table_[i * n + j].emplace_back(k, c);
    table_[j * n + i].emplace_back(k, -c);
  }
  // Map iteration gives increasing k per (i, j) already.
}

int LieAlgebra::index_of(const std::string& basis_name) const {
  auto it = std::find(basis_names_.begin(), basis_names_.end(), basis_name);
  return it == basis_names_.end() ? -1 : static_cast<int>(it - basis_names_.begin());
}

Scalar LieAlgebra::constant(int i, int j, int k) const {
  if (i == j) return 0;
  int sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -1;
  }
  auto it = upper_.find({i, j, k});
  if (it == upper_.end()) return 0;
  return sign > 0 ? it->second : Scalar(-it->second);
}

std::vector<Scalar> LieAlgebra::bracket(const std::vector<Scalar>& x,
                                        const std::vector<Scalar>& y) const {
  const int n = dim();
  std::vector<Scalar> out(n);
  for (const auto& [key, c] : upper_) {
    auto [i, j, k] = key;
    Scalar w = x[i] * y[j] - x[j] * y[i];
    if (!is_zero(w)) out[k] += c * w;
  }
  return out;
}

bool LieAlgebra::is_subalgebra(const std::vector<int>& indices) const {
  std::set<int> span(indices.begin(), indices.end());
  for (int i : span) {
    for (int j : span) {
      for (const auto& [k, c] : bracket(i, j)) {
        if (!span.count(k)) return false;
      }
    }
  }
  return true;
}

bool LieAlgebra::is_ideal(const std::vector<int>& indices) const {
  std::set<int> span(indices.begin(), indices.end());
  for (int i = 0; i < dim(); ++i) {
    for (int j : span) {
      for (const auto& [k, c] : bracket(i, j)) {
        if (!span.count(k)) return false;
      }
    }
  }
  return true;
}

std::string AxiomViolation::describe() const {
  std::ostringstream out;
  if (kind == Kind::Antisymmetry) {
    out << "antisymmetry: C^" << indices[2] + 1 << "_" << indices[0] + 1 << "," << indices[1] + 1
        << " + C^" << indices[2] + 1 << "_" << indices[1] + 1 << "," << indices[0] + 1 << " = "
        << to_string(value);
  } else {
    out << "jacobi: (e" << indices[0] + 1 << ", e" << indices[1] + 1 << ", e" << indices[2] + 1
        << ") component " << indices[3] + 1 << " = " << to_string(value);
  }
  return out.str();
}

namespace {

// Jacobi check on a bracket given as C(i, j, k).
template <class C>
void jacobi_violations(int n, const C& c, ValidationReport& report) {
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          Scalar sum = 0;
          for (int m = 0; m < n; ++m) {
            sum += c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) + c(k, i, m) * c(m, j, l);
          }
          if (!is_zero(sum)) {
            report.push_back({AxiomViolation::Kind::Jacobi, {i, j, k, l}, sum});
          }
        }
      }
    }
  }
}

}  // namespace

ValidationReport validate(const ConstantTensor& tensor) {
  const int n = tensor.dim;
  if (n < 0) throw StructuralError("negative dimension");
  for (const auto& [key, c] : tensor.entries) {
    auto [i, j, k] = key;
    check_index(i, n, "bracket");
    check_index(j, n, "bracket");
    check_index(k, n, "output");
  }
  auto get = [&](int i, int j, int k) {
    auto it = tensor.entries.find({i, j, k});
    return it == tensor.entries.end() ? Scalar(0) : it->second;
  };
  ValidationReport report;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Scalar s = get(i, j, k) + get(j, i, k);
        if (!is_zero(s)) report.push_back({AxiomViolation::Kind::Antisymmetry, {i, j, k, -1}, s});
      }
    }
  }
  jacobi_violations(n, get, report);
  return report;
}

ValidationReport validate(const LieAlgebra& g) {
  ValidationReport report;
  jacobi_violations(g.dim(), [&](int i, int j, int k) { return g.constant(i, j, k); }, report);
  return report;
}

void Cocycle2Scalar::set(int i, int j, const Scalar& v) {
  if (i == j) {
    if (!is_zero(v)) throw std::invalid_argument("2-form must vanish on the diagonal");
    return;
  }
  values_[i * dim_ + j] = v;
  values_[j * dim_ + i] = -v;
}

bool is_scalar_cocycle(const LieAlgebra& g, const Cocycle2Scalar& omega) {
  const int n = g.dim();
  if (omega.dim() != n) throw std::invalid_argument("2-form dimension mismatch");
  auto term = [&](int a, int b, int c) {
    Scalar s = 0;
    for (const auto& [m, v] : g.bracket(a, b)) s += v * omega(m, c);
    return s;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (!is_zero(term(i, j, k) + term(j, k, i) + term(k, i, j))) return false;
      }
    }
  }
  return true;
}

LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2) {
  std::vector<std::string> names = g1.basis_names();
  std::set<std::string> used(names.begin(), names.end());
  for (auto s : g2.basis_names()) {
    while (used.count(s)) s += "_2";
    used.insert(s);
    names.push_back(s);
  }
  LieAlgebra::ConstantMap upper = g1.upper_constants();
  const int shift = g1.dim();
  for (const auto& [key, c] : g2.upper_constants()) {
    auto [i, j, k] = key;
    upper.emplace(std::make_tuple(i + shift, j + shift, k + shift), c);
  }
  std::string name = g1.name().empty() || g2.name().empty() ? g1.name() + g2.name()
                                                             : g1.name() + "+" + g2.name();
  return LieAlgebra::from_upper(std::move(name), std::move(names), upper);
}

LieAlgebra semidirect_sum(const LieAlgebra& a, int n_dim, const ActionMatrices& action,
                          std::vector<std::string> module_names) {
  const int na = a.dim();
  if (n_dim < 0) throw StructuralError("negative module dimension");
  if (static_cast<int>(action.size()) != na) throw StructuralError("need one action matrix per basis element");
  for (const auto& m : action) {
    if (static_cast<int>(m.size()) != n_dim * n_dim) throw StructuralError("action matrix has wrong size");
  }
  // rho([e_i, e_j]) == rho(e_i) rho(e_j) - rho(e_j) rho(e_i)
  for (int i = 0; i < na; ++i) {
    for (int j = i + 1; j < na; ++j) {
      for (int r = 0; r < n_dim; ++r) {
        for (int s = 0; s < n_dim; ++s) {
          Scalar lhs = 0;
          for (const auto& [k, c] : a.bracket(i, j)) lhs += c * action[k][r * n_dim + s];
          Scalar rhs = 0;
          for (int t = 0; t < n_dim; ++t) {
            rhs += action[i][r * n_dim + t] * action[j][t * n_dim + s] -
                   action[j][r * n_dim + t] * action[i][t * n_dim + s];
          }
          if (lhs != rhs) throw ActionNotHomomorphism(i, j);
        }
      }
    }
  }
  if (module_names.empty()) {
    for (int r = 0; r < n_dim; ++r) module_names.push_back("v" + std::to_string(r + 1));
  }
  if (static_cast<int>(module_names.size()) != n_dim) throw StructuralError("module name count mismatch");
  std::vector<std::string> names = a.basis_names();
  names.insert(names.end(), module_names.begin(), module_names.end());
  LieAlgebra::ConstantMap upper = a.upper_constants();
  for (int i = 0; i < na; ++i) {
    for (int r = 0; r < n_dim; ++r) {
      for (int s = 0; s < n_dim; ++s) {
        const Scalar& c = action[i][s * n_dim + r];
        if (!is_zero(c)) upper.emplace(std::make_tuple(i, na + r, na + s), c);
      }
    }
  }
  return LieAlgebra::from_upper(a.name() + "|x|K" + std::to_string(n_dim), std::move(names), upper);
}

LieAlgebra central_extension(const LieAlgebra& g, const Cocycle2Scalar& omega,
                             std::string central_name) {
  if (!is_scalar_cocycle(g, omega)) throw NotACocycle("2-form is not a Chevalley-Eilenberg cocycle");
  const int n = g.dim();
  std::vector<std::string> names = g.basis_names();
  while (g.index_of(central_name) >= 0) central_name += "'";
  names.push_back(central_name);
  LieAlgebra::ConstantMap upper = g.upper_constants();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!is_zero(omega(i, j))) upper.emplace(std::make_tuple(i, j, n), omega(i, j));
    }
  }
  return LieAlgebra::from_upper(g.name() + "~", std::move(names), upper);
}

}  // namespace defq
