#include "dsurf/autgroup.hpp"

#include <numeric>

namespace dsurf {

namespace {

Poly scale_x(const Poly& f, const Scalar& mu) {
    if (mu.is_one()) return f;
    return substitute(f, {{Var::x, Poly::term(mu, Monomial::of(Var::x))}});
}

/// Terms of f of x-degree below n.
Poly low_part(const Poly& f, unsigned n) {
    Poly out(f.field());
    for (const auto& [m, c] : f.terms())
        if (m[Var::x] < n) out.add_term(m, c);
    return out;
}

bool only_x(const Poly& p) {
    for (Var v : kAllVars)
        if (v != Var::x && p.contains(v)) return false;
    return true;
}

void require_standard(const RingSpec& spec) {
    if (spec.kind() != RingKind::standard || spec.has_T())
        throw Error(ErrorCode::InvalidSpec, "automorphisms are defined on the standard rings R(n, h)");
}

Scalar sign(const FieldSpec& f, int s) { return Scalar(f, s); }

}  // namespace

bool preserves_h(const RingSpec& spec, const Scalar& mu) { return scale_x(spec.h(), mu) == spec.h(); }

RElem Automorphism::image(Var g) const {
    const FieldSpec fld = spec.field();
    switch (g) {
    case Var::x: return RElem(spec, Poly::term(mu, Monomial::of(Var::x)), Poly(fld));
    case Var::z: return RElem(spec, f, Poly::constant(sign(fld, sigma)));
    case Var::y: {
        const RElem z = image(Var::z);
        return r_x_divide(z * z + z.mul_poly(spec.h()), spec.n()) * mu.pow(-static_cast<long>(spec.n()));
    }
    default: throw Error(ErrorCode::InvalidArgument, std::string("no generator ") + var_name(g));
    }
}

RBindings Automorphism::images() const {
    return {{Var::x, image(Var::x)}, {Var::y, image(Var::y)}, {Var::z, image(Var::z)}};
}

RElem Automorphism::apply(const RElem& a) const { return r_apply(a.rebase(spec), images()); }

bool Automorphism::operator==(const Automorphism& o) const {
    return spec.compatible(o.spec) && mu == o.mu && sigma == o.sigma && f == o.f;
}

std::string to_string(const Automorphism& a) {
    return "(mu=" + a.mu.to_string() + ", sigma=" + (a.sigma > 0 ? "+1" : "-1") + ", f=" + to_string(a.f) + ")";
}

Automorphism identity_automorphism(const RingSpec& spec) {
    require_standard(spec);
    return Automorphism{spec, Scalar::one(spec.field()), 1, Poly(spec.field())};
}

Automorphism make_generator(const RingSpec& spec, const GeneratorKind& kind) {
    require_standard(spec);
    const FieldSpec fld = spec.field();
    if (const auto* e = std::get_if<GenEf>(&kind)) {
        if (e->f.field() != fld) throw Error(ErrorCode::FieldMismatch, "E_f coefficient over another field");
        if (!only_x(e->f)) throw Error(ErrorCode::InvalidArgument, "E_f needs f in x alone: " + to_string(e->f));
        return Automorphism{spec, Scalar::one(fld), 1, e->f.mul_monomial(Monomial::of(Var::x, spec.n()))};
    }
    if (std::holds_alternative<GenT>(kind)) return Automorphism{spec, Scalar::one(fld), -1, -spec.h()};
    const Scalar& mu = std::get<GenL>(kind).mu;
    if (mu.field() != fld) throw Error(ErrorCode::FieldMismatch, "mu over another field");
    if (mu.is_zero()) throw Error(ErrorCode::InvalidMu, "mu must be nonzero");
    if (!preserves_h(spec, mu))
        throw Error(ErrorCode::InvalidMu, "h(" + mu.to_string() + "x) != h(x) for h = " + to_string(spec.h()));
    return Automorphism{spec, mu, 1, Poly(fld)};
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
    if (!a.spec.compatible(b.spec))
        throw Error(ErrorCode::SpecMismatch, a.spec.to_string() + " vs " + b.spec.to_string());
    const FieldSpec fld = a.spec.field();
    Poly f = a.f * sign(fld, b.sigma) + scale_x(b.f, a.mu);
    return Automorphism{a.spec, a.mu * b.mu, a.sigma * b.sigma, std::move(f)};
}

Automorphism inverse(const Automorphism& a) {
    const Scalar mu_inv = a.mu.inv();
    return Automorphism{a.spec, mu_inv, a.sigma, -(scale_x(a.f, mu_inv) * sign(a.spec.field(), a.sigma))};
}

Automorphism verify_candidate(const RingSpec& spec, const RBindings& given) {
    require_standard(spec);
    const FieldSpec fld = spec.field();
    RBindings images;
    for (Var g : {Var::x, Var::y, Var::z}) {
        auto it = given.find(g);
        if (it == given.end()) throw Error(ErrorCode::InvalidArgument, std::string("missing image of ") + var_name(g));
        RElem img = it->second.rebase(spec);
        for (Var v : {Var::T, Var::U, Var::S})
            if (img.contains(v))
                throw Error(ErrorCode::InvalidArgument, std::string("image of ") + var_name(g) + " involves " + var_name(v));
        images.emplace(g, std::move(img));
    }

    const RElem& ax = images.at(Var::x);
    if (ax.is_zero()) throw Error(ErrorCode::NotInvertible, "x maps to 0");
    const Monomial x1 = Monomial::of(Var::x);
    if (!ax.f2().is_zero() || ax.f1().size() != 1 || ax.f1().terms().begin()->first != x1)
        throw Error(ErrorCode::NotOfLemmaForm, "image of x is " + to_string(ax) + ", not mu*x");
    const Scalar mu = ax.f1().coefficient(x1);

    const RElem& az = images.at(Var::z);
    if (!az.f2().is_constant() || az.f2().is_zero() || !only_x(az.f1()))
        throw Error(ErrorCode::NotOfLemmaForm, "image of z is " + to_string(az) + ", not +-z + f(x)");
    const Scalar lambda = az.f2().constant_term();
    const Poly& f = az.f1();
    int sigma = 0;
    if (fld.characteristic() == 2)
        sigma = f.constant_term().is_zero() ? 1 : -1;
    else if (lambda.is_one())
        sigma = 1;
    else if ((-lambda).is_one())
        sigma = -1;
    if (sigma == 0) throw Error(ErrorCode::NotOfLemmaForm, "coefficient of z is " + lambda.to_string() + ", not +-1");

    const unsigned n = spec.n();
    if (sigma == 1 && !low_part(f, n).is_zero())
        throw Error(ErrorCode::NotOfLemmaForm, "f = " + to_string(f) + " is not 0 mod x^" + std::to_string(n));
    if (sigma == -1 && !low_part(f + spec.h(), n).is_zero())
        throw Error(ErrorCode::NotOfLemmaForm, "f = " + to_string(f) + " is not -h mod x^" + std::to_string(n));
    if (!preserves_h(spec, mu))
        throw Error(ErrorCode::NotOfLemmaForm, "h(" + mu.to_string() + "x) != h(x)");

    const RElem rel = r_eval(spec.relation(), images, spec);
    if (!rel.is_zero()) throw Error(ErrorCode::NotEndomorphism, "relation maps to " + to_string(rel));

    Automorphism a{spec, mu, sigma, f};
    if (!(a.image(Var::y) == images.at(Var::y)))
        throw Error(ErrorCode::NotEndomorphism, "image of y disagrees with the relation");

    const Automorphism inv = inverse(a);
    const RBindings fwd = a.images();
    for (Var g : {Var::x, Var::y, Var::z})
        if (!(r_apply(inv.image(g), fwd) == RElem::generator(spec, g)))
            throw Error(ErrorCode::NotInvertible, std::string("inverse fails on ") + var_name(g));
    return a;
}

Word decompose(const Automorphism& a) {
    const FieldSpec fld = a.spec.field();
    const unsigned eps = a.sigma == -1 ? 1 : 0;
    Automorphism lt{a.spec, a.mu, 1, Poly(fld)};
    if (eps) lt = compose(lt, make_generator(a.spec, GenT{}));
    const Automorphism e = compose(inverse(lt), a);
    return Word{a.mu, eps, x_power_divide(e.f, a.spec.n())};
}

Automorphism recompose(const RingSpec& spec, const Word& w) {
    Automorphism out = make_generator(spec, GenL{w.mu});
    if (w.eps) out = compose(out, make_generator(spec, GenT{}));
    return compose(out, make_generator(spec, GenEf{w.f}));
}

GroupStructure group_structure(const RingSpec& spec) {
    require_standard(spec);
    const FieldSpec fld = spec.field();
    GroupStructure g;
    for (const auto& [m, c] : spec.h().terms()) g.m = std::gcd(g.m, m[Var::x]);

    const std::string k = fld.to_string();
    g.N_description = "additive group of " + k + "[x] (maps E_f)";
    if (g.m == 0) {
        g.l_kind = LKind::full;
        g.L_description = "full multiplicative group " + k + "*";
        g.H_description = "C2 x " + k + "*";
        return g;
    }
    if (fld.is_rational()) {
        g.l_elements = {Scalar::one(fld)};
        if (g.m % 2 == 0) g.l_elements.insert(g.l_elements.begin(), Scalar(fld, -1));
        g.l_order = static_cast<unsigned>(g.l_elements.size());
    } else if (fld.characteristic() <= 10000) {
        g.l_elements = nth_roots(Scalar::one(fld), g.m);
        g.l_order = static_cast<unsigned>(g.l_elements.size());
    } else {
        g.l_order = std::gcd(g.m, fld.characteristic() - 1);
    }
    if (g.l_order == 1) {
        g.l_kind = LKind::trivial;
        g.L_description = "trivial";
        g.H_description = "C2";
    } else {
        g.l_kind = LKind::cyclic;
        g.L_description = "cyclic of order " + std::to_string(g.l_order);
        g.H_description = "C2 x C" + std::to_string(g.l_order);
    }
    return g;
}

}  // namespace dsurf
