#pragma once

#include <optional>
#include <vector>

#include "defq/scalar.hpp"

namespace defq {

// Sparse rational vector: (coordinate, value) pairs, strictly increasing
// coordinates, no zero values.
using SparseVec = std::vector<std::pair<int, Scalar>>;

// y += a * x
void axpy(SparseVec& y, const Scalar& a, const SparseVec& x);
Scalar dot(const SparseVec& a, const SparseVec& b);

// Incremental row echelon form over Q. Vectors are reduced on their leading
// coordinate only and stored with leading coefficient 1. With history on,
// every stored row remembers which inserted vectors it combines, so
// dependencies come back as kernel vectors.
class Echelon {
 public:
  explicit Echelon(int width, bool track_history = false);

  int width() const { return width_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Inserts v under the caller's id. Returns the dependency relation
  // (sum of coeff * inserted vector = 0, involving `id` with coefficient 1)
  // if v is in the span and history is tracked; otherwise nullopt.
  std::optional<SparseVec> insert(SparseVec v, int id = -1);

  // True iff v lies in the span.
  bool contains(SparseVec v) const;

  // Expresses b as a combination of inserted vectors (needs history), or
  // returns nullopt together with the residual left after reduction.
  std::optional<SparseVec> express(SparseVec b, SparseVec* residual = nullptr) const;

  // A functional y with y(v) = 0 for every inserted v and y(r) != 0, where r
  // is outside the span.
  SparseVec annihilator(const SparseVec& r) const;

 private:
  // Reduces v on leading coordinates; if hist is given it accumulates the
  // (negated) combination subtracted.
  void reduce(SparseVec& v, SparseVec* hist) const;

  int width_;
  bool track_;
  std::vector<SparseVec> rows_;
  std::vector<SparseVec> history_;
  std::vector<int> pivot_row_;
};

// Rank of a list of sparse vectors of the given width.
int rank(const std::vector<SparseVec>& vectors, int width);

// Basis of {c : sum c_j v_j = 0}.
std::vector<SparseVec> kernel(const std::vector<SparseVec>& columns, int width);

struct SolveResult {
  bool feasible = false;
  SparseVec x;            // sum x_j columns[j] = b when feasible
  SparseVec certificate;  // y with y . columns[j] = 0 for all j and y . b != 0 otherwise
};

SolveResult solve(const std::vector<SparseVec>& columns, const SparseVec& b, int width);

}  // namespace defq
