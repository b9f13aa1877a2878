#pragma once

#include <cstdint>
#include <random>

#include "defq/multivector.hpp"
#include "defq/polynomial.hpp"

namespace defq {

using Rng = std::mt19937_64;

// Small nonzero rationals p/q with |p| <= 5, 1 <= q <= 3.
Scalar random_scalar(Rng& rng);

// Up to `terms` random monomials in `dim` variables of degree exactly
// `degree`, or of degree 0..degree when `homogeneous` is false.
Polynomial random_polynomial(Rng& rng, int dim, int degree, int terms, bool homogeneous = true);

// Random k-vector with up to `terms` blades, coefficients as above.
PolyMultiVector random_multivector(Rng& rng, int dim, int k, int poly_degree, int terms, bool homogeneous = true);

}  // namespace defq
