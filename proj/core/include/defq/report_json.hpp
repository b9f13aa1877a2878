#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "defq/cohomology.hpp"
#include "defq/enveloping.hpp"
#include "defq/rigidity.hpp"

namespace defq {

// JSON views of library results. Cochains and polynomials are written in the
// multivector text format with basis names, so every value round-trips
// through parse_multivector / parse_polynomial. Keys come out sorted, which
// keeps output byte-identical between runs.
nlohmann::json to_json(const SparseVec& v);
nlohmann::json to_json(const ObstructionWitness& w, const LieAlgebra& g);
nlohmann::json to_json(const DeformationWitness& w, const LieAlgebra& g);
nlohmann::json to_json(const RigidityReport& r, const LieAlgebra& g);
nlohmann::json to_json(const Sl2N3Certificate& c, const LieAlgebra& g);
nlohmann::json to_json(const HochschildSerreReport& r);
nlohmann::json to_json(const StarProduct& s, const LieAlgebra& g);
nlohmann::json cohomology_table_json(const LieAlgebra& g, const std::map<std::pair<int, int>, int>& table);

// Aligned plain-text table: one row per algebra, one column per l.
void print_rigidity_table(std::ostream& out, const std::vector<RigidityReport>& reports);

}  // namespace defq
