#include "dsurf/random.hpp"

namespace dsurf {

namespace {

Poly random_component(const RingSpec& spec, std::mt19937_64& rng, const SampleShape& shape) {
    const FieldSpec f = spec.field();
    std::uniform_int_distribution<unsigned> n_terms(0, shape.max_terms);
    std::uniform_int_distribution<unsigned> expo(0, shape.max_degree);
    std::uniform_int_distribution<long> coeff(-shape.coeff_bound, shape.coeff_bound);
    Poly p(f);
    const unsigned k = n_terms(rng);
    for (unsigned t = 0; t < k; ++t) {
        Monomial m;
        m[Var::x] = expo(rng);
        m[Var::y] = expo(rng);
        if (spec.has_T()) m[Var::T] = expo(rng);
        p.add_term(m, Scalar(f, coeff(rng)));
    }
    return p;
}

}  // namespace

RElem random_element(const RingSpec& spec, std::mt19937_64& rng, const SampleShape& shape) {
    Poly f1 = random_component(spec, rng, shape);
    Poly f2 = random_component(spec, rng, shape);
    if (spec.is_free()) return RElem(spec, f1 + f2.mul_monomial(Monomial::of(Var::z)), Poly(spec.field()));
    return RElem(spec, std::move(f1), std::move(f2));
}

Poly random_x_poly(const FieldSpec& field, std::mt19937_64& rng, unsigned max_degree, long coeff_bound) {
    std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
    Poly p(field);
    for (unsigned e = 0; e <= max_degree; ++e) p.add_term(Monomial::of(Var::x, e), Scalar(field, coeff(rng)));
    return p;
}

}  // namespace dsurf
