#pragma once

// Isomorphism test for R(n1, h1) and R(n2, h2): n1 = n2 and h2(x) = eta h1(mu x).

#include <optional>
#include <string>
#include <vector>

#include "dsurf/autgroup.hpp"

namespace dsurf {

enum class IsoReason { n_mismatch, support_mismatch, no_root, ok };
const char* to_string(IsoReason r);

struct IsoVerdict {
    bool isomorphic = false;
    std::optional<Scalar> eta;
    std::optional<Scalar> mu;
    IsoReason reason = IsoReason::n_mismatch;
};

/// Smallest valid mu in the canonical scalar order.
IsoVerdict classify(const RingSpec& left, const RingSpec& right);

struct IsoWitness {
    RingSpec left, right;
    /// x1 -> mu x2, y1 -> eta^-2 mu^-n y2, z1 -> eta^-1 z2, in R2.
    RBindings forward;
    /// The inverse map R2 -> R1.
    RBindings backward;
};

/// Both directions are checked to preserve the relations and to compose to the
/// identity; VerificationFailed otherwise, InvalidArgument for a negative verdict.
IsoWitness witness(const RingSpec& left, const RingSpec& right, const IsoVerdict& verdict);

/// w o a o w^-1 on R2, accepted through verify_candidate.
Automorphism transport_automorphism(const IsoWitness& w, const Automorphism& a);

/// Exhaustive search over (eta, mu) in (F_p*)^2, p <= 101; mu ascending, then eta.
IsoVerdict iso_oracle_enumerate(const RingSpec& left, const RingSpec& right);

/// Every R(n, h) over F_p with deg h < n and h(0) != 0.
std::vector<RingSpec> reduced_specs(const FieldSpec& field, unsigned n);

}  // namespace dsurf
