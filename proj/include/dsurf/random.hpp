#pragma once

// Deterministic random ring elements for sampled property checks.

#include <random>

#include "dsurf/ring.hpp"

namespace dsurf {

struct SampleShape {
    unsigned max_degree = 3;  ///< per-variable exponent bound
    unsigned max_terms = 4;   ///< per component
    long coeff_bound = 3;     ///< coefficients drawn from [-bound, bound]
};

/// f1 + z f2 with f1, f2 in the z-free generators (x, y and T when present).
RElem random_element(const RingSpec& spec, std::mt19937_64& rng, const SampleShape& shape = {});

/// Random polynomial in x alone.
Poly random_x_poly(const FieldSpec& field, std::mt19937_64& rng, unsigned max_degree, long coeff_bound = 3);

}  // namespace dsurf
