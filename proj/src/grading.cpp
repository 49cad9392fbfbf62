#include "dsurf/grading.hpp"

#include <random>

#include "dsurf/random.hpp"

namespace dsurf {

std::optional<mpq_class> weighted_degree(const RElem& a, const WeightVector& w) {
    return weighted_degree(a.to_poly(), w);
}

RElem top_part(const RElem& a, const WeightVector& w, const RingSpec& target) {
    return normal_form(target, top_part(a.to_poly(), w));
}

mpq_class compute_grdeg_U(const ExponentialMap& phi, const WeightVector& w) {
    std::optional<mpq_class> best;
    for (Var g : phi.spec().generators()) {
        const auto derivs = higher_derivations(phi, RElem::generator(phi.spec(), g));
        for (unsigned i = 1; i < derivs.size(); ++i) {
            if (derivs[i].is_zero()) continue;
            const mpq_class q = (w.at(g) - *weighted_degree(derivs[i], w)) / i;
            if (!best || q < *best) best = q;
        }
    }
    if (!best) throw Error(ErrorCode::TrivialMap, "every generator is fixed, grdeg(U) is undefined");
    return *best;
}

HomogenizationResult homogenize(const ExponentialMap& phi, const WeightVector& w, const RingSpec& target) {
    const RingSpec& source = phi.spec();
    if (target.field() != source.field())
        throw Error(ErrorCode::FieldMismatch, "target over " + target.field().to_string());
    if (target.has_T() != source.has_T())
        throw Error(ErrorCode::InvalidArgument, "source and target must have the same generators");

    const Poly rel = source.relation();
    const Poly top_rel = rel.is_zero() ? rel : top_part(rel, w);
    if (!(top_rel == target.relation()))
        throw Error(ErrorCode::InhomogeneousTarget, "top part of the relation is " + to_string(top_rel) +
                                                        " but the target relation is " + to_string(target.relation()));

    HomogenizationResult out{compute_grdeg_U(phi, w), phi, target, ExponentialMap::trivial(target), {}, 0};
    const FieldSpec f = source.field();

    RBindings bar_images;
    for (Var g : source.generators()) {
        const RElem gen = RElem::generator(source, g);
        const auto derivs = higher_derivations(phi, gen);
        auto& S = out.S_sets[g];
        S.push_back(0);
        RElem bar = RElem::generator(target, g);
        if (derivs.size() > 1) {
            const mpq_class wg = w.at(g);
            for (unsigned i = 1; i < derivs.size(); ++i) {
                if (derivs[i].is_zero()) continue;
                if (*weighted_degree(derivs[i], w) + i * out.grdeg_U != wg) continue;
                S.push_back(i);
                bar += top_part(derivs[i], w, target).mul_monomial(Monomial::of(Var::U, i));
            }
        }
        bar_images.emplace(g, std::move(bar));
    }

    try {
        out.bar = ExponentialMap::from_images(target, bar_images);
    } catch (const Error& e) {
        throw Error(ErrorCode::VerificationFailed, std::string("homogenized map: ") + e.what());
    }
    if (!out.bar.nontrivial()) throw Error(ErrorCode::VerificationFailed, "homogenized map is trivial");

    std::vector<Poly> bases{Poly::var(f, Var::x) + Poly::constant(f, 1)};
    if (!source.h().is_zero() && !source.h().is_constant()) bases.push_back(source.h());
    for (const Poly& q : bases)
        for (unsigned k = 0; k <= 3; ++k)
            for (unsigned m = 0; m <= 3; ++m) {
                const RElem a = normal_form(source, q.pow(m).mul_monomial(Monomial::of(Var::x, k)));
                if (!is_invariant(phi, a)) continue;
                const RElem top = top_part(a, w, target);
                if (!is_invariant(out.bar, top))
                    throw Error(ErrorCode::VerificationFailed,
                                "top part " + to_string(top) + " of invariant " + to_string(a) + " is moved by the bar map");
                ++out.containment_samples;
            }
    return out;
}

RElem iterated_top_part(const RElem& a, const std::vector<Stage>& stages) {
    RElem cur = a;
    for (const Stage& s : stages) {
        if (cur.is_zero()) return RElem(stages.back().target);
        cur = top_part(cur, s.weights, s.target);
    }
    return cur;
}

IteratedHomogenization iterate_homogenize(const ExponentialMap& phi, const std::vector<Stage>& stages) {
    if (stages.empty()) throw Error(ErrorCode::InvalidArgument, "no stages");
    IteratedHomogenization out;
    out.stages.reserve(stages.size());
    const ExponentialMap* cur = &phi;
    for (const Stage& s : stages) {
        out.stages.push_back(homogenize(*cur, s.weights, s.target));
        cur = &out.stages.back().bar;
    }

    const RingSpec& source = phi.spec();
    const FieldSpec f = source.field();
    std::vector<RElem> sample{
        RElem::generator(source, Var::y) + RElem::generator(source, Var::z).mul_poly(Poly::var(f, Var::x) + Poly::constant(f, 1)),
        RElem::generator(source, Var::y) + RElem::generator(source, Var::z).mul_monomial(Monomial::of(Var::x, 2)),
    };
    std::mt19937_64 rng(0x5eed);
    for (int i = 0; i < 40; ++i) {
        RElem a = random_element(source, rng);
        if (!a.is_zero()) sample.push_back(std::move(a));
    }
    out.top_parts_monomial = true;
    for (const RElem& a : sample) {
        if (iterated_top_part(a, stages).to_poly().size() != 1) out.top_parts_monomial = false;
        ++out.monomial_samples;
    }
    return out;
}

}  // namespace dsurf
