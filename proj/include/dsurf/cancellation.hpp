#pragma once

// R1 = R(n1, 1) inside R2[T] = R(n2, 1)[T] as the invariants of an exponential
// map with slice s, for 2 <= n1 < n2 <= 2 n1.

#include "dsurf/expmap.hpp"

namespace dsurf {

struct CancellationWitness {
    unsigned n1 = 0, n2 = 0;
    RingSpec r1;
    /// R(n2, 1) with T as an extra generator.
    RingSpec ambient;
    /// Images of x, y, z of R1 in the ambient ring: z1 = z2 + x^n1 T,
    /// y1 = x^(n2-n1) y2 + (2 z1 + 1) T - x^n1 T^2.
    RBindings embedding;
    ExponentialMap phi;
    RElem s;
};

/// IllegalParameters unless 2 <= n1 < n2 <= 2 n1; VerificationFailed if any
/// check of verify_cancellation fails.
CancellationWitness build_cancellation(const FieldSpec& field, unsigned n1, unsigned n2);

/// Checks, in order: exponential, embedded_relation, recovered_relation,
/// invariance, slice, linear_form, rewrite.
Report verify_cancellation(const CancellationWitness& w);

/// Elements whose expansion in powers of s is checked by the rewrite check.
std::vector<RElem> rewrite_samples(const CancellationWitness& w);

/// phi on R2, dropping T.
ExponentialMap restrict_to_R2(const CancellationWitness& w);

}  // namespace dsurf
