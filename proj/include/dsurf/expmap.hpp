#pragma once

// Exponential maps phi: A -> A[U] on the surface rings, their higher
// derivations D^i, phi-degrees, and the invariant-rewriting recursion.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dsurf/report.hpp"
#include "dsurf/ring.hpp"

namespace dsurf {

/// Generator images in A[U]. Construct via build_from_theorem or
/// ExponentialMap::from_images; both verify the axioms.
class ExponentialMap {
public:
    /// Fills omitted generators (identity, or solved from the relation for y),
    /// verifies, and throws VerificationFailed with the failing check otherwise.
    static ExponentialMap from_images(const RingSpec& spec, const RBindings& images);
    /// The standard inclusion a -> a.
    static ExponentialMap trivial(const RingSpec& spec);

    const RingSpec& spec() const { return spec_; }
    const RBindings& images() const { return images_; }
    const RElem& image(Var g) const { return images_.at(g); }
    bool verified() const { return verified_; }
    /// Some generator image differs from the generator.
    bool nontrivial() const;

    /// phi(a) in A[U]; a must not involve U or S.
    RElem apply(const RElem& a) const;

private:
    ExponentialMap(RingSpec spec, RBindings images) : spec_(std::move(spec)), images_(std::move(images)) {}

    RingSpec spec_;
    RBindings images_;
    bool verified_ = false;
};

/// Index e and coefficient f_e(x) of x^n f_e(x) U^e in phi(z).
using TheoremCoefficients = std::vector<std::pair<unsigned, Poly>>;

/// phi(x) = x, phi(z) = z + x^n sum f_e U^e, phi(y) solved from the relation.
/// Exponents must be 1 in characteristic 0, and 1 or a power of p otherwise.
ExponentialMap build_from_theorem(const RingSpec& spec, const TheoremCoefficients& coeffs);

/// phi(y) from x^n phi(y) = phi(z)^2 + h(x) phi(z), assuming phi(x) = x.
RElem solve_y_image(const RingSpec& spec, const RElem& z_image);

/// Checks "relation", "axiom_i" (U = 0 gives identity) and "axiom_ii"
/// (phi_S phi_U = phi_{S+U} on generators). Omitted generator images are
/// completed as in ExponentialMap::from_images; an unsolvable y image fails
/// the relation check.
Report verify_exponential(const RingSpec& spec, const RBindings& images);

/// U^i coefficient of phi(a).
RElem higher_derivation(const ExponentialMap& phi, unsigned i, const RElem& a);
/// All D^i(a), i = 0..deg_phi(a).
std::vector<RElem> higher_derivations(const ExponentialMap& phi, const RElem& a);

/// deg_U of an element of A[U]; nullopt is -infinity.
std::optional<unsigned> u_degree(const RElem& a);
std::optional<unsigned> phi_degree(const ExponentialMap& phi, const RElem& a);
bool is_invariant(const ExponentialMap& phi, const RElem& a);

struct Endomorphism {
    RingSpec spec;
    RBindings images;
};

/// U = 1 specialization; checked to be inverted by the U = -1 specialization.
Endomorphism evaluate_at_one(const ExponentialMap& phi);

/// Coefficients a_l (index l) with a = sum a_l s^l and every a_l invariant,
/// for a slice s (phi(s) = s + U). NotApplicable if s is not a slice,
/// StepLimit if the recursion does not finish within max_steps.
std::vector<RElem> rewrite_in_invariants(const ExponentialMap& phi, const RElem& s, const RElem& a,
                                         unsigned max_steps = 256);

/// Leibniz rule for i <= 6 and D^i D^j = C(i+j, i) D^(i+j) for i + j <= max_index,
/// on `samples` random elements drawn from `seed`. Checks "leibniz", "iterative".
Report check_derivation_laws(const ExponentialMap& phi, unsigned samples, std::uint64_t seed, unsigned max_index = 8);

}  // namespace dsurf
