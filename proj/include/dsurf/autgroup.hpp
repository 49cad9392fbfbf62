#pragma once

// Aut(R) through canonical triples (mu, sigma, f): x -> mu x, z -> sigma z + f(x).

#include <string>
#include <variant>
#include <vector>

#include "dsurf/ring.hpp"

namespace dsurf {

/// sigma is kept as +1/-1 even in characteristic 2, where T and E_f still differ
/// through f(0).
struct Automorphism {
    RingSpec spec;
    Scalar mu;
    int sigma = 1;
    Poly f;

    /// Images of x, y, z; y is solved from the relation.
    RBindings images() const;
    RElem image(Var g) const;
    RElem apply(const RElem& a) const;

    bool operator==(const Automorphism& o) const;
};

std::string to_string(const Automorphism& a);

struct GenEf {
    Poly f;
};
struct GenT {};
struct GenL {
    Scalar mu;
};
using GeneratorKind = std::variant<GenEf, GenT, GenL>;

/// E_f = (1, +1, x^n f), T = (1, -1, -h), L_mu = (mu, +1, 0). InvalidMu unless
/// mu != 0 and h(mu x) = h(x).
Automorphism make_generator(const RingSpec& spec, const GeneratorKind& kind);
Automorphism identity_automorphism(const RingSpec& spec);

/// a after b: (a o b)(r) = a(b(r)).
Automorphism compose(const Automorphism& a, const Automorphism& b);
Automorphism inverse(const Automorphism& a);

/// Shape and congruence conditions first (NotOfLemmaForm, NotInvertible for
/// x -> 0), then the relation (NotEndomorphism), then the inverse (NotInvertible).
Automorphism verify_candidate(const RingSpec& spec, const RBindings& images);

/// a = L_mu o T^eps o E_f.
struct Word {
    Scalar mu;
    unsigned eps = 0;
    Poly f;
};

Word decompose(const Automorphism& a);
Automorphism recompose(const RingSpec& spec, const Word& w);

enum class LKind { trivial, cyclic, full };

struct GroupStructure {
    /// gcd of exponents of the nonconstant terms of h; 0 when h is constant.
    unsigned m = 0;
    LKind l_kind = LKind::full;
    /// Order of L when finite.
    unsigned l_order = 0;
    /// The mu in L when L is finite, ascending.
    std::vector<Scalar> l_elements;
    std::string L_description;
    std::string H_description;
    std::string N_description;
};

GroupStructure group_structure(const RingSpec& spec);

/// h(mu x) == h(x).
bool preserves_h(const RingSpec& spec, const Scalar& mu);

}  // namespace dsurf
