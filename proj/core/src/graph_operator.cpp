#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "defq/enveloping.hpp"

namespace defq {

void GraphOperator::check() const {
  if (r < 0) throw MalformedGraph("negative number of bivector slots");
  if (static_cast<int>(partition.size()) != r + 2) {
    throw MalformedGraph("partition needs r + 2 = " + std::to_string(r + 2) + " entries, got " +
                         std::to_string(partition.size()));
  }
  int total = 0;
  for (int n : partition) {
    if (n < 0) throw MalformedGraph("partition entries must be nonnegative");
    total += n;
  }
  if (total != 2 * r) {
    throw MalformedGraph("partition sums to " + std::to_string(total) + ", expected " + std::to_string(2 * r));
  }
  if (static_cast<int>(sigma.size()) != 2 * r) throw MalformedGraph("permutation must have 2r entries");
  std::vector<bool> seen(2 * r, false);
  for (int s : sigma) {
    if (s < 1 || s > 2 * r || seen[s - 1]) throw MalformedGraph("sigma is not a permutation of 1..2r");
    seen[s - 1] = true;
  }
}

GraphOperator exponential_graph(int r) {
  GraphOperator op;
  op.r = r;
  op.partition.assign(r, 0);
  op.partition.push_back(r);
  op.partition.push_back(r);
  for (int k = 1; k <= r; ++k) {
    op.sigma.push_back(k);
    op.sigma.push_back(r + k);
  }
  Scalar fact = 1;
  for (int i = 2; i <= r; ++i) fact *= i;
  op.weight = 1 / fact;
  return op;
}

std::vector<std::vector<int>> partitions_of(int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(r + 2, 0);
  auto rec = [&](auto&& self, int slot, int left) -> void {
    if (slot == r + 1) {
      cur[slot] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[slot] = v;
      self(self, slot + 1, left - v);
    }
  };
  rec(rec, 0, 2 * r);
  return out;
}

namespace {

// Evaluates the contraction position by position. Factors are visited in the
// order P_1, ..., P_r, f, g; each one fixes the summation indices it touches
// for the first time, so zero partial products cut whole subtrees.
class Contraction {
 public:
  Contraction(const GraphOperator& op, const std::vector<const PolyMultiVector*>& slots, const Polynomial& f,
              const Polynomial& g)
      : op_(op), slots_(slots), f_(f), g_(g), dim_(slots[0]->dim()) {
    const int factors = op.r + 2;
    int pos = 0;
    for (int i = 0; i < factors; ++i) {
      std::vector<int> block(op.partition[i]);
      std::iota(block.begin(), block.end(), pos);
      pos += op.partition[i];
      derivs_.push_back(block);
    }
    a_.assign(2 * op.r, -1);
    cache_.resize(factors);
  }

  Polynomial run() {
    Polynomial total;
    visit(0, Polynomial(1), total);
    return total;
  }

 private:
  std::vector<int> touched(int factor) const {
    std::vector<int> pos = derivs_[factor];
    if (factor < op_.r) {
      pos.push_back(op_.sigma[2 * factor] - 1);
      pos.push_back(op_.sigma[2 * factor + 1] - 1);
    }
    return pos;
  }

  void visit(int factor, const Polynomial& acc, Polynomial& total) {
    if (factor == op_.r + 2) {
      total += acc;
      return;
    }
    std::vector<int> free;
    for (int p : touched(factor)) {
      if (a_[p] < 0 && std::find(free.begin(), free.end(), p) == free.end()) free.push_back(p);
    }
    assign(factor, free, 0, acc, total);
  }

  void assign(int factor, const std::vector<int>& free, std::size_t k, const Polynomial& acc, Polynomial& total) {
    if (k < free.size()) {
      for (int v = 0; v < dim_; ++v) {
        a_[free[k]] = v;
        assign(factor, free, k + 1, acc, total);
      }
      a_[free[k]] = -1;
      return;
    }
    const Polynomial& value = evaluate(factor);
    if (value.is_zero()) return;
    visit(factor + 1, acc * value, total);
  }

  const Polynomial& evaluate(int factor) {
    const std::size_t nd = derivs_[factor].size();
    std::vector<int> key;
    for (int p : derivs_[factor]) key.push_back(a_[p]);
    std::sort(key.begin(), key.end());
    if (factor < op_.r) {
      key.push_back(a_[op_.sigma[2 * factor] - 1]);
      key.push_back(a_[op_.sigma[2 * factor + 1] - 1]);
    }
    auto& cache = cache_[factor];
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    Polynomial base;
    if (factor < op_.r) {
      int i = key[nd], j = key[nd + 1];
      // P^{ij} = -P^{ji}; the blade stores i < j.
      if (i < j) base = slots_[factor]->coefficient({i, j});
      if (i > j) base = -slots_[factor]->coefficient({j, i});
    } else {
      base = factor == op_.r ? f_ : g_;
    }
    for (std::size_t t = 0; t < nd && !base.is_zero(); ++t) base = base.derivative(key[t]);
    return cache.emplace(std::move(key), std::move(base)).first->second;
  }

  const GraphOperator& op_;
  std::vector<const PolyMultiVector*> slots_;
  const Polynomial& f_;
  const Polynomial& g_;
  int dim_;
  std::vector<std::vector<int>> derivs_;
  std::vector<int> a_;
  std::vector<std::map<std::vector<int>, Polynomial>> cache_;
};

Polynomial contract(const GraphOperator& op, const std::vector<const PolyMultiVector*>& slots, const Polynomial& f,
                    const Polynomial& g) {
  op.check();
  if (static_cast<int>(slots.size()) != op.r) {
    throw std::invalid_argument("graph has " + std::to_string(op.r) + " bivector slots, got " +
                                std::to_string(slots.size()));
  }
  for (const auto* p : slots) {
    if (p->degree() != 2) throw std::invalid_argument("graph slots take bivectors");
    if (p->dim() != slots[0]->dim()) throw std::invalid_argument("bivectors live in different dimensions");
  }
  if (op.r == 0) return f * g * op.weight;
  return Contraction(op, slots, f, g).run() * op.weight;
}

}  // namespace

Polynomial graph_apply(const GraphOperator& op, const std::vector<PolyMultiVector>& bivectors, const Polynomial& f,
                       const Polynomial& g) {
  std::vector<const PolyMultiVector*> slots;
  for (const auto& p : bivectors) slots.push_back(&p);
  return contract(op, slots, f, g);
}

Polynomial graph_apply_series(const GraphOperator& op, const FormalBivectorSeries& s, int k, const Polynomial& f,
                              const Polynomial& g) {
  op.check();
  if (k < 0) throw std::invalid_argument("negative t-order");
  if (s.terms.empty()) throw std::invalid_argument("empty bivector series");
  Polynomial total;
  if (op.r == 0) return k == 0 ? f * g * op.weight : total;
  const int T = s.truncation();
  std::vector<int> b(op.r, 0);
  auto rec = [&](auto&& self, int slot, int left) -> void {
    if (slot == op.r - 1) {
      if (left > T) return;
      b[slot] = left;
      std::vector<const PolyMultiVector*> slots;
      for (int bi : b) slots.push_back(&s.terms[bi]);
      total += contract(op, slots, f, g);
      return;
    }
    for (int v = 0; v <= std::min(left, T); ++v) {
      b[slot] = v;
      self(self, slot + 1, left - v);
    }
  };
  rec(rec, 0, k);
  return total;
}

namespace {

std::vector<int> parse_int_list(const std::string& text, int line) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw MalformedGraph("line " + std::to_string(line) + ": bad integer '" + item + "'");
    }
  }
  return out;
}

}  // namespace

std::vector<GraphOperator> read_graph_table(std::istream& in) {
  std::vector<GraphOperator> out;
  std::string text;
  int line = 0;
  bool header = false;
  while (std::getline(in, text)) {
    ++line;
    auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (text[first] == '#') {
      if (!header && text.find("defq-graphs") != std::string::npos) {
        if (text.find("defq-graphs v1") == std::string::npos) {
          throw MalformedGraph("line " + std::to_string(line) + ": unsupported graph table version");
        }
        header = true;
      }
      continue;
    }
    if (!header) throw MalformedGraph("missing '# defq-graphs v1' header");
    GraphOperator op;
    bool has_r = false, has_p = false, has_s = false, has_w = false;
    std::stringstream fields(text);
    std::string field;
    while (fields >> field) {
      auto eq = field.find('=');
      if (eq == std::string::npos) throw MalformedGraph("line " + std::to_string(line) + ": expected key=value");
      std::string key = field.substr(0, eq), value = field.substr(eq + 1);
      if (key == "r") {
        auto v = parse_int_list(value, line);
        if (v.size() != 1) throw MalformedGraph("line " + std::to_string(line) + ": bad r");
        op.r = v[0];
        has_r = true;
      } else if (key == "partition") {
        op.partition = parse_int_list(value, line);
        has_p = true;
      } else if (key == "sigma") {
        op.sigma = value.empty() ? std::vector<int>{} : parse_int_list(value, line);
        has_s = true;
      } else if (key == "weight") {
        try {
          op.weight = parse_scalar(value);
        } catch (const std::exception&) {
          throw MalformedGraph("line " + std::to_string(line) + ": bad weight '" + value + "'");
        }
        has_w = true;
      } else {
        throw MalformedGraph("line " + std::to_string(line) + ": unknown key '" + key + "'");
      }
    }
    if (!(has_r && has_p && has_s && has_w)) {
      throw MalformedGraph("line " + std::to_string(line) + ": need r, partition, sigma and weight");
    }
    try {
      op.check();
    } catch (const MalformedGraph& e) {
      throw MalformedGraph("line " + std::to_string(line) + ": " + e.what());
    }
    out.push_back(std::move(op));
  }
  return out;
}

void write_graph_table(std::ostream& out, const std::vector<GraphOperator>& ops) {
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  out << "# defq-graphs v1\n";
  for (const auto& op : ops) {
    out << "r=" << op.r << " partition=" << join(op.partition) << " sigma=" << join(op.sigma)
        << " weight=" << to_string(op.weight) << "\n";
  }
}

}  // namespace defq
