#include "dsurf/expmap.hpp"

#include <algorithm>
#include <random>

#include "dsurf/random.hpp"

namespace dsurf {

namespace {

bool is_power_of(unsigned e, unsigned p) {
    if (e == 0) return false;
    while (e % p == 0) e /= p;
    return e == 1;
}

RElem constant_u_free(const RingSpec& spec, Var v) { return RElem::generator(spec, v); }

/// Variables an image may involve: generators and U.
std::optional<Var> stray_variable(const RingSpec& spec, const RElem& img) {
    for (Var v : kAllVars) {
        if (v == Var::U) continue;
        const auto gens = spec.generators();
        if (std::find(gens.begin(), gens.end(), v) != gens.end()) continue;
        if (img.contains(v)) return v;
    }
    return std::nullopt;
}

RBindings complete_images(const RingSpec& spec, const RBindings& partial) {
    const auto gens = spec.generators();
    RBindings out;
    for (const auto& [v, img] : partial) {
        if (std::find(gens.begin(), gens.end(), v) == gens.end())
            throw Error(ErrorCode::InvalidArgument,
                        std::string("image given for non-generator ") + var_name(v) + " of " + spec.to_string());
        out.emplace(v, img.rebase(spec));
    }
    for (Var g : gens) {
        if (out.count(g) != 0 || g == Var::y) continue;
        out.emplace(g, constant_u_free(spec, g));
    }
    if (out.count(Var::y) == 0) {
        if (spec.is_free()) {
            out.emplace(Var::y, constant_u_free(spec, Var::y));
        } else {
            if (!(out.at(Var::x) == RElem::generator(spec, Var::x)))
                throw Error(ErrorCode::InvalidArgument, "the y image can only be solved for when x is fixed");
            out.emplace(Var::y, solve_y_image(spec, out.at(Var::z)));
        }
    }
    return out;
}

/// x, z, T before y, whose image is usually derived from z.
std::vector<Var> check_order(const RBindings& images) {
    std::vector<Var> order;
    for (Var v : {Var::x, Var::z, Var::T, Var::y})
        if (images.count(v)) order.push_back(v);
    return order;
}

RBindings specialize_u(const RBindings& images, const RElem& value) {
    RBindings out;
    for (const auto& [g, img] : images) out.emplace(g, r_apply(img, {{Var::U, value}}));
    return out;
}

}  // namespace

RElem solve_y_image(const RingSpec& spec, const RElem& z_image) {
    if (spec.is_free()) throw Error(ErrorCode::InvalidSpec, "free rings have no relation to solve");
    const RElem z = z_image.rebase(spec);
    const RElem rhs = z * z + z.mul_poly(spec.h());
    return r_x_divide(rhs, spec.n());
}

Report verify_exponential(const RingSpec& spec, const RBindings& partial) {
    Report report;
    RBindings images;
    try {
        images = complete_images(spec, partial);
    } catch (const Error& e) {
        report.add("relation", false, e.what());
        return report;
    }

    std::string stray;
    for (const auto& [g, img] : images)
        if (auto v = stray_variable(spec, img)) {
            stray = std::string("image of ") + var_name(g) + " involves " + var_name(*v);
            break;
        }

    if (!stray.empty()) {
        report.add("relation", false, stray);
    } else if (spec.is_free()) {
        report.add("relation", true, "free ring");
    } else {
        const RElem image_of_relation = r_eval(spec.relation(), images, spec);
        report.add("relation", image_of_relation.is_zero(),
                   image_of_relation.is_zero() ? "" : "relation maps to " + to_string(image_of_relation));
    }

    {
        std::string detail;
        const RElem zero_u(spec);
        for (Var g : check_order(images)) {
            const RElem& img = images.at(g);
            const RElem at_zero = r_apply(img, {{Var::U, zero_u}});
            if (!(at_zero == RElem::generator(spec, g))) {
                detail = std::string("U=0 sends ") + var_name(g) + " to " + to_string(at_zero);
                break;
            }
        }
        report.add("axiom_i", detail.empty(), detail);
    }

    {
        const FieldSpec f = spec.field();
        const RElem s = RElem(spec, Poly::var(f, Var::S), Poly(f));
        const RElem s_plus_u = RElem(spec, Poly::var(f, Var::S) + Poly::var(f, Var::U), Poly(f));
        const RBindings phi_s = specialize_u(images, s);
        std::string detail;
        for (Var g : check_order(images)) {
            const RElem& img = images.at(g);
            const RElem lhs = r_apply(img, phi_s);
            const RElem rhs = r_apply(img, {{Var::U, s_plus_u}});
            if (!(lhs == rhs)) {
                detail = std::string("on ") + var_name(g) + ": phi_S(phi_U) - phi_{S+U} = " + to_string(lhs - rhs);
                break;
            }
        }
        report.add("axiom_ii", detail.empty(), detail);
    }
    return report;
}

ExponentialMap ExponentialMap::from_images(const RingSpec& spec, const RBindings& images) {
    const Report r = verify_exponential(spec, images);
    if (!r.passed()) throw Error(ErrorCode::VerificationFailed, r.first_failure());
    ExponentialMap phi(spec, complete_images(spec, images));
    phi.verified_ = true;
    return phi;
}

ExponentialMap ExponentialMap::trivial(const RingSpec& spec) { return from_images(spec, {}); }

bool ExponentialMap::nontrivial() const {
    for (const auto& [g, img] : images_)
        if (!(img == RElem::generator(spec_, g))) return true;
    return false;
}

RElem ExponentialMap::apply(const RElem& a) const {
    if (a.contains(Var::U) || a.contains(Var::S))
        throw Error(ErrorCode::InvalidArgument, "argument of phi must not involve U or S");
    return r_apply(a.rebase(spec_), images_);
}

ExponentialMap build_from_theorem(const RingSpec& spec, const TheoremCoefficients& coeffs) {
    if (spec.is_free()) throw Error(ErrorCode::InvalidSpec, "build_from_theorem needs a surface ring");
    const FieldSpec f = spec.field();
    const unsigned p = f.characteristic();
    Poly F(f);
    for (const auto& [e, fe] : coeffs) {
        const bool legal = e == 1 || (p != 0 && is_power_of(e, p));
        if (!legal)
            throw Error(ErrorCode::IllegalExponent,
                        "exponent " + std::to_string(e) +
                            (p == 0 ? " (characteristic 0 allows only U^1)" : " is neither 1 nor a power of " + std::to_string(p)));
        for (Var v : kAllVars)
            if (v != Var::x && fe.contains(v))
                throw Error(ErrorCode::InvalidArgument, "coefficient f_" + std::to_string(e) + " must be in x alone");
        F += fe.mul_monomial(Monomial::of(Var::U, e));
    }
    const RElem z = RElem::generator(spec, Var::z);
    const RElem z_image = z + RElem(spec, F.mul_monomial(Monomial::of(Var::x, spec.n())), Poly(f));

    RBindings images{{Var::x, RElem::generator(spec, Var::x)},
                     {Var::z, z_image},
                     {Var::y, solve_y_image(spec, z_image)}};
    try {
        return ExponentialMap::from_images(spec, images);
    } catch (const Error& e) {
        throw Error(ErrorCode::VerificationFailed, std::string("internal: theorem map failed verification: ") + e.what());
    }
}

std::optional<unsigned> u_degree(const RElem& a) {
    auto d1 = a.f1().degree(Var::U), d2 = a.f2().degree(Var::U);
    if (!d1) return d2;
    if (!d2) return d1;
    return std::max(*d1, *d2);
}

RElem higher_derivation(const ExponentialMap& phi, unsigned i, const RElem& a) {
    const RElem image = phi.apply(a);
    return RElem(phi.spec(), coeff_of(image.f1(), Var::U, i), coeff_of(image.f2(), Var::U, i));
}

std::vector<RElem> higher_derivations(const ExponentialMap& phi, const RElem& a) {
    const RElem image = phi.apply(a);
    std::vector<RElem> out;
    const auto d = u_degree(image);
    if (!d) return {RElem(phi.spec())};
    for (unsigned i = 0; i <= *d; ++i)
        out.emplace_back(phi.spec(), coeff_of(image.f1(), Var::U, i), coeff_of(image.f2(), Var::U, i));
    return out;
}

std::optional<unsigned> phi_degree(const ExponentialMap& phi, const RElem& a) { return u_degree(phi.apply(a)); }

bool is_invariant(const ExponentialMap& phi, const RElem& a) { return phi.apply(a) == a.rebase(phi.spec()); }

Endomorphism evaluate_at_one(const ExponentialMap& phi) {
    const RingSpec& spec = phi.spec();
    const RBindings plus = specialize_u(phi.images(), RElem::constant(spec, 1));
    const RBindings minus = specialize_u(phi.images(), RElem::constant(spec, -1));
    for (Var g : spec.generators()) {
        const RElem gen = RElem::generator(spec, g);
        if (!(r_apply(plus.at(g), minus) == gen) || !(r_apply(minus.at(g), plus) == gen))
            throw Error(ErrorCode::VerificationFailed,
                        std::string("U=1 and U=-1 specializations are not inverse on ") + var_name(g));
    }
    return Endomorphism{spec, plus};
}

std::vector<RElem> rewrite_in_invariants(const ExponentialMap& phi, const RElem& s, const RElem& a,
                                         unsigned max_steps) {
    const RingSpec& spec = phi.spec();
    const RElem slice = s.rebase(spec);
    const RElem u(spec, Poly::var(spec.field(), Var::U), Poly(spec.field()));
    if (!(phi.apply(slice) == slice + u))
        throw Error(ErrorCode::NotApplicable, "phi(s) != s + U for s = " + to_string(slice));

    std::vector<RElem> coeffs;
    RElem rest = a.rebase(spec);
    for (unsigned step = 0; step < max_steps; ++step) {
        const auto d = phi_degree(phi, rest);
        if (!d || *d == 0) {
            if (coeffs.empty()) coeffs.emplace_back(spec);
            coeffs[0] = rest;
            return coeffs;
        }
        const RElem lead = higher_derivation(phi, *d, rest);
        if (coeffs.size() <= *d) coeffs.resize(*d + 1, RElem(spec));
        coeffs[*d] = lead;
        rest -= lead * slice.pow(*d);
    }
    throw Error(ErrorCode::StepLimit, "rewrite did not terminate within " + std::to_string(max_steps) + " steps");
}

Report check_derivation_laws(const ExponentialMap& phi, unsigned samples, std::uint64_t seed, unsigned max_index) {
    const RingSpec& spec = phi.spec();
    std::mt19937_64 rng(seed);
    const SampleShape shape{2, 3, 3};
    const auto d_at = [&](const std::vector<RElem>& ds, unsigned i) { return i < ds.size() ? ds[i] : RElem(spec); };

    std::string leibniz, iterative;
    for (unsigned k = 0; k < samples && (leibniz.empty() || iterative.empty()); ++k) {
        const RElem a = random_element(spec, rng, shape);
        const RElem b = random_element(spec, rng, shape);
        const auto da = higher_derivations(phi, a);
        const auto db = higher_derivations(phi, b);
        const auto dab = higher_derivations(phi, a * b);
        for (unsigned i = 0; i <= 6 && leibniz.empty(); ++i) {
            RElem sum(spec);
            for (unsigned j = 0; j <= i; ++j) sum += d_at(da, j) * d_at(db, i - j);
            if (!(sum == d_at(dab, i)))
                leibniz = "D^" + std::to_string(i) + "(ab) mismatch for a = " + to_string(a) + ", b = " + to_string(b);
        }
        for (unsigned j = 0; j <= max_index && iterative.empty(); ++j) {
            const auto dj = higher_derivations(phi, d_at(da, j));
            for (unsigned i = 0; i + j <= max_index; ++i) {
                if (!(d_at(dj, i) == d_at(da, i + j) * binom(i + j, i, spec.field()))) {
                    iterative = "D^" + std::to_string(i) + " D^" + std::to_string(j) + " mismatch for a = " + to_string(a);
                    break;
                }
            }
        }
    }
    Report r;
    r.add("leibniz", leibniz.empty(), leibniz);
    r.add("iterative", iterative.empty(), iterative);
    return r;
}

}  // namespace dsurf
