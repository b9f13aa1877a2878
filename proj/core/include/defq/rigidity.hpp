#pragma once

#include <optional>
#include <string>
#include <vector>

#include "defq/cohomology.hpp"
#include "defq/lie_algebra.hpp"
#include "defq/multivector.hpp"

namespace defq {

enum class Verdict { RigidUpTo, Obstructed };

std::string to_string(Verdict v);

// A cocycle whose class is certified nonzero: the certificate is a functional
// on slice (k, l) coordinates that kills every coboundary but not the cocycle.
struct ObstructionWitness {
  Cochain cocycle;
  int k = 2;
  int l = 0;
  SparseVec certificate;
  std::string source;  // "scan", "scalar" or "counterexample"
};

// A formal Poisson series P_0 + t P_1 whose first-order term is not a
// coboundary in the named complex.
struct DeformationWitness {
  std::string algebra;
  FormalBivectorSeries series;
  bool self_bracket_zero = false;  // [P_1, P_1] = 0
  bool compatible = false;         // [P_0, P_1] = 0
  FormalPoissonReport poisson;
  // Complex in which P_1 was tested: cochains on `acting`, invariant under
  // `invariant_under` (both basis index lists; empty invariance = none).
  std::vector<int> acting;
  std::vector<int> invariant_under;
  CoboundaryResult coboundary;

  bool certified() const { return self_bracket_zero && compatible && !coboundary.primitive; }
};

struct RigidityReport {
  std::string algebra;
  int L = 0;
  std::vector<int> table;  // dim H^2(g, S^l g), l = 0..L
  Verdict verdict = Verdict::RigidUpTo;
  std::optional<ObstructionWitness> witness;
  int scalar_h2 = 0;
  std::optional<ObstructionWitness> scalar_witness;
  std::optional<DeformationWitness> deformation;
  std::string scope;
  std::string linearization;
};

// dim H^2(g, S^l g) for l = 0..L. A nonzero slice yields an obstructed
// verdict with the first non-coboundary basis cocycle of the lowest such l.
RigidityReport strong_rigidity_scan(const LieAlgebra& g, int L, int jobs = 1);

// A scalar 2-cocycle that is not a coboundary, if H^2(g, K) != 0.
std::optional<ObstructionWitness> scalar_obstruction(const LieAlgebra& g);

// P_1 = β X2² d1^d3 + γ(-X2X3 d1^d4 + X2X5 d3^d4) + α X1X5 d2^d4 on t1_n56.
PolyMultiVector resoluble_p1(const Scalar& alpha, const Scalar& beta, const Scalar& gamma);

// Throws std::invalid_argument for (0, 0, 0).
DeformationWitness verify_resoluble_counterexample(const Scalar& alpha, const Scalar& beta, const Scalar& gamma);

struct Sl2N3Certificate {
  DeformationWitness witness;  // P = C q*^p*, C = h² + 4ef
  bool invariant = false;      // annihilated by h, e, f
  // F = {u in S²g : {x_q, u} = {x_p, u} = 0}
  std::vector<Polynomial> kernel_basis;
  bool expected_basis_in_span = false;  // z², q² - 2ez, pq + hz, p² + 2fz
  CoboundaryResult constant_case;       // q*^p* itself, in the same complex
  bool certified() const;
};

Sl2N3Certificate verify_sl2n3_counterexample();

struct SuiteEntry {
  RigidityReport report;
  Verdict expected = Verdict::RigidUpTo;
  bool matches() const { return report.verdict == expected; }
};

inline const std::vector<std::string> kPositivePanel = {"zero",     "k1",        "r2",       "sl2",
                                                        "gl2",      "sl2_x_r2",  "sl2_x_sl2", "gl2_x_k2"};
inline const std::vector<std::string> kNegativePanel = {"n3", "t1_n56", "sl2_n3", "borel_sl3"};

// strong_rigidity_scan, plus the certified deformation witness when g is one
// of the two counterexample algebras (same basis names and constants).
RigidityReport rigidity_report(const LieAlgebra& g, int L, int jobs = 1);

// Requires L >= 2. Entries come positive panel first, each panel in order.
std::vector<SuiteEntry> classification_suite(int L, int jobs = 1);

std::string linearization_verdict(const RigidityReport& report);

}  // namespace defq
