#include "dsurf/cancellation.hpp"

namespace dsurf {

namespace {

RElem xpow(const RingSpec& s, unsigned e) { return RElem::generator(s, Var::x, e); }

}  // namespace

CancellationWitness build_cancellation(const FieldSpec& field, unsigned n1, unsigned n2) {
    if (!(2 <= n1 && n1 < n2 && n2 <= 2 * n1))
        throw Error(ErrorCode::IllegalParameters,
                    "need 2 <= n1 < n2 <= 2 n1, got n1=" + std::to_string(n1) + ", n2=" + std::to_string(n2));
    const Poly one = Poly::constant(field, 1);
    const RingSpec r1 = RingSpec::standard(field, n1, one);
    const RingSpec amb = RingSpec::standard(field, n2, one).with_T();

    const RElem x = RElem::generator(amb, Var::x);
    const RElem y2 = RElem::generator(amb, Var::y);
    const RElem z2 = RElem::generator(amb, Var::z);
    const RElem T = RElem::generator(amb, Var::T);
    const RElem U(amb, Poly::var(field, Var::U), Poly(field));
    const RElem c1 = RElem::constant(amb, 1), c2 = RElem::constant(amb, 2);

    const RElem z1 = z2 + xpow(amb, n1) * T;
    const RElem lin = c2 * z1 + c1;
    const RElem y1 = xpow(amb, n2 - n1) * y2 + lin * T - xpow(amb, n1) * T * T;

    RBindings phi_images{
        {Var::x, x},
        {Var::z, z2 + xpow(amb, n2) * U},
        {Var::y, y2 + (c2 * z1 - c2 * xpow(amb, n1) * T + c1) * U + xpow(amb, n2) * U * U},
        {Var::T, T - xpow(amb, n2 - n1) * U},
    };

    const RElem s = -(RElem::constant(amb, 4) * xpow(amb, 3 * n1 - n2) * T.pow(3)) +
                    RElem::constant(amb, 3) * xpow(amb, 2 * n1 - n2) * lin * T * T +
                    RElem::constant(amb, 4) * xpow(amb, n1) * y2 * T + y2 * lin;

    CancellationWitness w{n1, n2, r1, amb, {{Var::x, x}, {Var::y, y1}, {Var::z, z1}},
                          ExponentialMap::from_images(amb, phi_images), s};
    const Report r = verify_cancellation(w);
    if (!r.passed()) throw Error(ErrorCode::VerificationFailed, r.first_failure());
    return w;
}

std::vector<RElem> rewrite_samples(const CancellationWitness& w) {
    const RingSpec& a = w.ambient;
    const RElem T = RElem::generator(a, Var::T), y2 = RElem::generator(a, Var::y), z2 = RElem::generator(a, Var::z);
    return {T, y2, z2, T * T, y2 * z2};
}

Report verify_cancellation(const CancellationWitness& w) {
    const RingSpec& amb = w.ambient;
    const FieldSpec f = amb.field();
    Report r;

    {
        const Report e = verify_exponential(amb, w.phi.images());
        r.add("exponential", e.passed(), e.first_failure());
    }

    const RElem& x = w.embedding.at(Var::x);
    const RElem& y1 = w.embedding.at(Var::y);
    const RElem& z1 = w.embedding.at(Var::z);
    const RElem T = RElem::generator(amb, Var::T);
    const RElem one = RElem::constant(amb, 1);

    {
        const RElem d = r_eval(w.r1.relation(), w.embedding, amb);
        r.add("embedded_relation", d.is_zero(), d.is_zero() ? "" : "x^n1 y1 - z1^2 - z1 = " + to_string(d));
    }
    {
        const RElem z = z1 - xpow(amb, w.n1) * T;
        const RElem d = xpow(amb, w.n2) * RElem::generator(amb, Var::y) - z * z - z;
        r.add("recovered_relation", d.is_zero(), d.is_zero() ? "" : "difference " + to_string(d));
    }
    {
        std::string detail;
        const std::pair<const char*, const RElem*> gens[] = {{"x", &x}, {"y1", &y1}, {"z1", &z1}};
        for (const auto& [name, g] : gens) {
            const RElem moved = w.phi.apply(*g) - *g;
            if (!moved.is_zero()) {
                detail = std::string("phi(") + name + ") - " + name + " = " + to_string(moved);
                break;
            }
        }
        r.add("invariance", detail.empty(), detail);
    }
    {
        const RElem U(amb, Poly::var(f, Var::U), Poly(f));
        const RElem d = w.phi.apply(w.s) - w.s - U;
        r.add("slice", d.is_zero(), d.is_zero() ? "" : "phi(s) - s - U = " + to_string(d));
    }
    {
        const RElem d = xpow(amb, w.n2 - w.n1) * w.s + T - y1 * (RElem::constant(amb, 2) * z1 + one);
        r.add("linear_form", d.is_zero(), d.is_zero() ? "" : "x^(n2-n1) s + T - y1(2 z1 + 1) = " + to_string(d));
    }
    {
        std::string detail;
        for (const RElem& a : rewrite_samples(w)) {
            try {
                const auto coeffs = rewrite_in_invariants(w.phi, w.s, a);
                RElem back(amb);
                RElem s_pow = one;
                for (std::size_t l = 0; l < coeffs.size(); ++l) {
                    if (!is_invariant(w.phi, coeffs[l])) {
                        detail = "coefficient " + std::to_string(l) + " of " + to_string(a) + " is not invariant";
                        break;
                    }
                    back += coeffs[l] * s_pow;
                    s_pow *= w.s;
                }
                if (detail.empty() && !(back == a)) detail = "expansion of " + to_string(a) + " does not reconstruct it";
            } catch (const Error& e) {
                detail = to_string(a) + ": " + e.what();
            }
            if (!detail.empty()) break;
        }
        r.add("rewrite", detail.empty(), detail);
    }
    return r;
}

ExponentialMap restrict_to_R2(const CancellationWitness& w) {
    const RingSpec r2 = w.ambient.without_T();
    RBindings images;
    for (Var g : r2.generators()) {
        const RElem& img = w.phi.image(g);
        if (img.contains(Var::T))
            throw Error(ErrorCode::InvalidArgument, std::string("image of ") + var_name(g) + " involves T");
        images.emplace(g, img.rebase(r2));
    }
    return ExponentialMap::from_images(r2, images);
}

}  // namespace dsurf
