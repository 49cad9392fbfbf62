#pragma once

// Weight filtrations, grdeg(U), index sets S(g) and the homogenized map.

#include <map>
#include <vector>

#include "dsurf/expmap.hpp"

namespace dsurf {

/// Weighted degree of the representative f1 + z f2; nullopt for zero.
std::optional<mpq_class> weighted_degree(const RElem& a, const WeightVector& w);

/// Top part of a, read in `target` (normal form there).
RElem top_part(const RElem& a, const WeightVector& w, const RingSpec& target);

/// min over generators g and i >= 1 with D^i(g) != 0 of (w(g) - w(D^i g)) / i.
/// TrivialMap when every generator is fixed.
mpq_class compute_grdeg_U(const ExponentialMap& phi, const WeightVector& w);

struct HomogenizationResult {
    mpq_class grdeg_U;
    ExponentialMap source;
    RingSpec target;
    ExponentialMap bar;
    std::map<Var, std::vector<unsigned>> S_sets;
    /// Invariants of the source whose top parts were checked against bar.
    std::size_t containment_samples = 0;
};

/// Needs top_part(source relation) == target relation (InhomogeneousTarget
/// otherwise). The bar map is verified on the target and the top parts of
/// sampled invariants x^k q^m (q in {h, 1 + x}, k, m <= 3) are checked to be
/// bar-invariant; either failure is VerificationFailed.
HomogenizationResult homogenize(const ExponentialMap& phi, const WeightVector& w, const RingSpec& target);

struct Stage {
    WeightVector weights;
    RingSpec target;
};

struct IteratedHomogenization {
    std::vector<HomogenizationResult> stages;
    /// Every sampled element's iterated top part is a single term.
    bool top_parts_monomial = false;
    std::size_t monomial_samples = 0;
};

/// Stage k homogenizes the bar map of stage k-1.
IteratedHomogenization iterate_homogenize(const ExponentialMap& phi, const std::vector<Stage>& stages);

/// Top part after each stage in turn.
RElem iterated_top_part(const RElem& a, const std::vector<Stage>& stages);

}  // namespace dsurf
