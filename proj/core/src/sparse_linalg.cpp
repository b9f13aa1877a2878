#include "defq/sparse_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace defq {

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (is_zero(a) || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  auto p = y.begin();
  auto q = x.begin();
  while (p != y.end() || q != x.end()) {
    if (q == x.end() || (p != y.end() && p->first < q->first)) {
      out.push_back(std::move(*p++));
    } else if (p == y.end() || q->first < p->first) {
      out.emplace_back(q->first, a * q->second);
      ++q;
    } else {
      Scalar s = p->second + a * q->second;
      if (!is_zero(s)) out.emplace_back(p->first, std::move(s));
      ++p;
      ++q;
    }
  }
  y = std::move(out);
}

Scalar dot(const SparseVec& a, const SparseVec& b) {
  Scalar s = 0;
  auto p = a.begin();
  auto q = b.begin();
  while (p != a.end() && q != b.end()) {
    if (p->first < q->first) {
      ++p;
    } else if (q->first < p->first) {
      ++q;
    } else {
      s += p->second * q->second;
      ++p;
      ++q;
    }
  }
  return s;
}

Echelon::Echelon(int width, bool track_history)
    : width_(width), track_(track_history), pivot_row_(width, -1) {}

void Echelon::reduce(SparseVec& v, SparseVec* hist) const {
  std::size_t start = 0;
  while (start < v.size()) {
    // Coordinates before `start` are non-pivot and stay untouched by later
    // subtractions, whose rows only reach coordinates >= their pivot.
    int lead = v[start].first;
    int r = pivot_row_[lead];
    if (r < 0) {
      ++start;
      continue;
    }
    Scalar a = -v[start].second;
    axpy(v, a, rows_[r]);
    if (hist) axpy(*hist, a, history_[r]);
  }
}

std::optional<SparseVec> Echelon::insert(SparseVec v, int id) {
  SparseVec hist;
  if (track_) hist.emplace_back(id, Scalar(1));
  reduce(v, track_ ? &hist : nullptr);
  if (v.empty()) {
    if (track_) return hist;
    return std::nullopt;
  }
  // Pick the first coordinate as pivot; all earlier coordinates were free.
  Scalar inv = 1 / v.front().second;
  for (auto& [i, c] : v) c *= inv;
  for (auto& [i, c] : hist) c *= inv;
  pivot_row_[v.front().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(v));
  if (track_) history_.push_back(std::move(hist));
  return std::nullopt;
}

bool Echelon::contains(SparseVec v) const {
  reduce(v, nullptr);
  return v.empty();
}

std::optional<SparseVec> Echelon::express(SparseVec b, SparseVec* residual) const {
  if (!track_) throw std::logic_error("express needs an echelon built with history");
  SparseVec hist;
  reduce(b, &hist);
  if (!b.empty()) {
    if (residual) *residual = std::move(b);
    return std::nullopt;
  }
  // b - sum(...) = 0 with hist holding the negated coefficients.
  for (auto& [i, c] : hist) c = -c;
  std::erase_if(hist, [](const auto& t) { return is_zero(t.second); });
  return hist;
}

SparseVec Echelon::annihilator(const SparseVec& r) const {
  // Reduced row echelon form of the stored rows, pivots in increasing order.
  std::vector<int> pivots;
  for (int c = 0; c < width_; ++c) {
    if (pivot_row_[c] >= 0) pivots.push_back(c);
  }
  std::vector<SparseVec> rref(pivots.size());
  std::vector<int> slot(width_, -1);
  for (std::size_t k = 0; k < pivots.size(); ++k) slot[pivots[k]] = static_cast<int>(k);
  for (std::size_t k = pivots.size(); k-- > 0;) {
    SparseVec row = rows_[pivot_row_[pivots[k]]];
    // Clear later pivot columns using rows already in reduced form.
    for (std::size_t e = 1; e < row.size();) {
      int s = slot[row[e].first];
      if (s < 0) {
        ++e;
        continue;
      }
      Scalar a = -row[e].second;
      axpy(row, a, rref[s]);
    }
    rref[k] = std::move(row);
  }
  SparseVec v = r;
  for (std::size_t e = 0; e < v.size();) {
    int s = slot[v[e].first];
    if (s < 0) {
      ++e;
      continue;
    }
    Scalar a = -v[e].second;
    axpy(v, a, rref[s]);
  }
  if (v.empty()) throw std::invalid_argument("vector lies in the span; no annihilator separates it");
  int t = v.front().first;
  // y = e_t - sum_k rref_k[t] e_{pivot_k}
  SparseVec y;
  y.emplace_back(t, Scalar(1));
  for (std::size_t k = 0; k < rref.size(); ++k) {
    for (const auto& [i, c] : rref[k]) {
      if (i == t) {
        y.emplace_back(pivots[k], -c);
        break;
      }
    }
  }
  std::sort(y.begin(), y.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return y;
}

namespace {

// Sparser vectors first keeps fill-in down; ties keep input order.
std::vector<int> insertion_order(const std::vector<SparseVec>& vectors) {
  std::vector<int> order(vectors.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return vectors[a].size() < vectors[b].size(); });
  return order;
}

}  // namespace

int rank(const std::vector<SparseVec>& vectors, int width) {
  Echelon e(width);
  for (int i : insertion_order(vectors)) {
    e.insert(vectors[i]);
  }
  return e.rank();
}

std::vector<SparseVec> kernel(const std::vector<SparseVec>& columns, int width) {
  Echelon e(width, true);
  std::vector<SparseVec> out;
  for (int i = 0; i < static_cast<int>(columns.size()); ++i) {
    if (auto rel = e.insert(columns[i], i)) out.push_back(std::move(*rel));
  }
  return out;
}

SolveResult solve(const std::vector<SparseVec>& columns, const SparseVec& b, int width) {
  Echelon e(width, true);
  for (int i : insertion_order(columns)) e.insert(columns[i], i);
  SolveResult out;
  SparseVec residual;
  if (auto x = e.express(b, &residual)) {
    out.feasible = true;
    out.x = std::move(*x);
  } else {
    out.certificate = e.annihilator(residual);
  }
  return out;
}

}  // namespace defq
