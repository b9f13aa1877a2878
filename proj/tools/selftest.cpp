#include "selftest.hpp"

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "defq/cohomology.hpp"
#include "defq/enveloping.hpp"
#include "defq/lie_algebra.hpp"
#include "defq/multivector.hpp"
#include "defq/multivector_text.hpp"
#include "defq/random.hpp"

namespace defq {

namespace {

struct Property {
  std::string name;
  std::function<bool(Rng&)> check;
};

int sign(int e) { return e % 2 == 0 ? 1 : -1; }

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

const LieAlgebra& pick_algebra(Rng& rng) {
  static const std::vector<LieAlgebra> pool = {catalog("r2"), catalog("n3"), catalog("sl2"), catalog("t1_n56")};
  return pool[uniform(rng, 0, static_cast<int>(pool.size()) - 1)];
}

std::vector<Property> properties() {
  return {
      {"schouten graded antisymmetry",
       [](Rng& rng) {
         const int n = uniform(rng, 2, 4), p = uniform(rng, 0, 3), q = uniform(rng, 0, 3);
         auto a = random_multivector(rng, n, p, uniform(rng, 0, 2), 3, false);
         auto b = random_multivector(rng, n, q, uniform(rng, 0, 2), 3, false);
         return schouten(a, b) == schouten(b, a) * Scalar(-sign((p - 1) * (q - 1)));
       }},
      {"schouten graded jacobi",
       [](Rng& rng) {
         const int n = 3, p = uniform(rng, 1, 2), q = uniform(rng, 1, 2), r = uniform(rng, 1, 2);
         auto a = random_multivector(rng, n, p, 1, 2, false);
         auto b = random_multivector(rng, n, q, 1, 2, false);
         auto c = random_multivector(rng, n, r, 1, 2, false);
         auto sum = schouten(a, schouten(b, c)) * Scalar(sign((p - 1) * (r - 1))) +
                    schouten(b, schouten(c, a)) * Scalar(sign((q - 1) * (p - 1))) +
                    schouten(c, schouten(a, b)) * Scalar(sign((r - 1) * (q - 1)));
         return sum.is_zero();
       }},
      {"ce differential squares to zero",
       [](Rng& rng) {
         const LieAlgebra& g = pick_algebra(rng);
         auto phi = random_multivector(rng, g.dim(), uniform(rng, 0, 3), uniform(rng, 0, 2), 3);
         return ce_diff(g, ce_diff(g, phi)).is_zero();
       }},
      {"ce differential matches [P0, .]",
       [](Rng& rng) {
         const LieAlgebra& g = pick_algebra(rng);
         auto phi = random_multivector(rng, g.dim(), uniform(rng, 0, 3), uniform(rng, 0, 2), 3);
         return ce_diff(g, phi) == ce_diff_schouten(g, phi);
       }},
      {"symmetrization round trip",
       [](Rng& rng) {
         const LieAlgebra& g = pick_algebra(rng);
         PBW pbw(g);
         auto f = random_polynomial(rng, g.dim(), uniform(rng, 0, 3), 3, false);
         return pbw.unsymmetrize(pbw.symmetrize(f)) == f;
       }},
      {"text format round trip",
       [](Rng& rng) {
         const int n = uniform(rng, 1, 5), k = uniform(rng, 0, 3);
         if (k > n) return true;
         auto v = random_multivector(rng, n, k, uniform(rng, 0, 3), 4, false);
         return parse_multivector(format(v), n, {}, k) == v;
       }},
  };
}

}  // namespace

bool run_selftest(std::ostream& out, std::uint64_t seed, int count, bool json) {
  Rng rng(seed);
  bool ok = true;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& prop : properties()) {
    int failures = 0, first_failure = -1;
    for (int i = 0; i < count; ++i) {
      if (!prop.check(rng)) {
        if (failures++ == 0) first_failure = i;
      }
    }
    ok = ok && failures == 0;
    if (json) {
      rows.push_back({{"property", prop.name}, {"cases", count}, {"failures", failures}, {"first_failure", first_failure}});
    } else {
      out << (failures == 0 ? "ok   " : "FAIL ") << prop.name << " (" << count << " cases";
      if (failures) out << ", " << failures << " failed, first at case " << first_failure;
      out << ")\n";
    }
  }
  if (json) {
    out << nlohmann::json{{"config", {{"command", "selftest"}, {"seed", seed}, {"count", count}}},
                          {"properties", rows},
                          {"passed", ok}}
               .dump(2)
        << "\n";
  }
  return ok;
}

}  // namespace defq
