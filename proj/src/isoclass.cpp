#include "dsurf/isoclass.hpp"

#include <algorithm>
#include <tuple>

namespace dsurf {

namespace {

std::vector<std::uint32_t> support(const Poly& h) {
    std::vector<std::uint32_t> s;
    for (const auto& [m, c] : h.terms()) s.push_back(m[Var::x]);
    std::sort(s.begin(), s.end());
    return s;
}

Scalar coeff(const Poly& h, std::uint32_t i) { return h.coefficient(Monomial::of(Var::x, i)); }

void require_pair(const RingSpec& a, const RingSpec& b) {
    for (const RingSpec* s : {&a, &b})
        if (s->kind() != RingKind::standard || s->has_T())
            throw Error(ErrorCode::InvalidSpec, "isomorphism test needs standard rings R(n, h)");
    if (a.field() != b.field())
        throw Error(ErrorCode::FieldMismatch, a.field().to_string() + " vs " + b.field().to_string());
}

/// h(mu x) * eta.
Poly transform(const Poly& h, const Scalar& eta, const Scalar& mu) {
    Poly out(h.field());
    for (const auto& [m, c] : h.terms()) out.add_term(m, eta * c * mu.pow(m[Var::x]));
    return out;
}

void check_map(const RingSpec& from, const RingSpec& to, const RBindings& images, const char* label) {
    const RElem rel = r_eval(from.relation(), images, to);
    if (!rel.is_zero())
        throw Error(ErrorCode::VerificationFailed, std::string(label) + " sends the relation to " + to_string(rel));
}

}  // namespace

const char* to_string(IsoReason r) {
    switch (r) {
    case IsoReason::n_mismatch: return "n_mismatch";
    case IsoReason::support_mismatch: return "support_mismatch";
    case IsoReason::no_root: return "no_root";
    case IsoReason::ok: return "ok";
    }
    return "?";
}

IsoVerdict classify(const RingSpec& left, const RingSpec& right) {
    require_pair(left, right);
    IsoVerdict v;
    if (left.n() != right.n()) return v;
    const Poly& h1 = left.h();
    const Poly& h2 = right.h();
    const auto supp = support(h1);
    if (supp != support(h2)) {
        v.reason = IsoReason::support_mismatch;
        return v;
    }
    const FieldSpec f = left.field();
    const Scalar eta = h2.constant_term() / h1.constant_term();

    // mu^i = c_i for every nonzero support index; Bezout folds them into mu^d = c.
    Scalar c = Scalar::one(f);
    long d = 0;
    std::vector<std::pair<std::uint32_t, Scalar>> eqs;
    for (std::uint32_t i : supp) {
        if (i == 0) continue;
        const Scalar ci = coeff(h2, i) / (eta * coeff(h1, i));
        eqs.emplace_back(i, ci);
        if (d == 0) {
            d = i;
            c = ci;
            continue;
        }
        // s*d + t*i = g
        long old_r = d, r = i, old_s = 1, s = 0, old_t = 0, t = 1;
        while (r != 0) {
            const long q = old_r / r;
            std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
            std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
            std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
        }
        c = c.pow(old_s) * ci.pow(old_t);
        d = old_r;
    }

    Scalar mu = Scalar::one(f);
    if (d != 0) {
        bool found = false;
        for (const Scalar& cand : nth_roots(c, static_cast<unsigned>(d))) {
            bool good = true;
            for (const auto& [i, ci] : eqs)
                if (!(cand.pow(i) == ci)) {
                    good = false;
                    break;
                }
            if (good) {
                mu = cand;
                found = true;
                break;
            }
        }
        if (!found) {
            v.reason = IsoReason::no_root;
            return v;
        }
    }
    if (!(transform(h1, eta, mu) == h2))
        throw Error(ErrorCode::VerificationFailed, "classifier produced eta, mu with h2 != eta h1(mu x)");
    v.isomorphic = true;
    v.eta = eta;
    v.mu = mu;
    v.reason = IsoReason::ok;
    return v;
}

IsoWitness witness(const RingSpec& left, const RingSpec& right, const IsoVerdict& verdict) {
    require_pair(left, right);
    if (!verdict.isomorphic || !verdict.eta || !verdict.mu)
        throw Error(ErrorCode::InvalidArgument, "witness needs a positive verdict");
    const FieldSpec f = left.field();
    const Scalar& eta = *verdict.eta;
    const Scalar& mu = *verdict.mu;
    const long n = static_cast<long>(left.n());
    const auto lin = [&](const RingSpec& s, Var v, const Scalar& c) {
        return RElem(s, Poly::term(c, Monomial::of(v)), Poly(f));
    };

    IsoWitness w{left, right, {}, {}};
    w.forward = {{Var::x, lin(right, Var::x, mu)},
                 {Var::y, lin(right, Var::y, eta.pow(-2) * mu.pow(-n))},
                 {Var::z, RElem(right, Poly(f), Poly::constant(eta.inv()))}};
    w.backward = {{Var::x, lin(left, Var::x, mu.inv())},
                  {Var::y, lin(left, Var::y, eta.pow(2) * mu.pow(n))},
                  {Var::z, RElem(left, Poly(f), Poly::constant(eta))}};
    check_map(left, right, w.forward, "forward map");
    check_map(right, left, w.backward, "backward map");
    for (Var g : {Var::x, Var::y, Var::z}) {
        if (!(r_apply(w.forward.at(g), w.backward, left) == RElem::generator(left, g)) ||
            !(r_apply(w.backward.at(g), w.forward, right) == RElem::generator(right, g)))
            throw Error(ErrorCode::VerificationFailed, std::string("witness maps are not inverse on ") + var_name(g));
    }
    return w;
}

Automorphism transport_automorphism(const IsoWitness& w, const Automorphism& a) {
    if (!a.spec.compatible(w.left)) throw Error(ErrorCode::SpecMismatch, "automorphism not on the left ring");
    const RBindings a_images = a.images();
    RBindings images;
    for (Var g : {Var::x, Var::y, Var::z}) {
        const RElem pulled = w.backward.at(g);
        const RElem moved = r_apply(pulled, a_images, w.left);
        images.emplace(g, r_apply(moved, w.forward, w.right));
    }
    return verify_candidate(w.right, images);
}

IsoVerdict iso_oracle_enumerate(const RingSpec& left, const RingSpec& right) {
    require_pair(left, right);
    const FieldSpec f = left.field();
    if (f.is_rational() || f.characteristic() > 101)
        throw Error(ErrorCode::InvalidField, "oracle needs F_p with p <= 101, got " + f.to_string());
    IsoVerdict v;
    if (left.n() != right.n()) return v;
    const std::uint32_t p = f.characteristic();
    for (std::uint32_t m = 1; m < p; ++m)
        for (std::uint32_t e = 1; e < p; ++e) {
            const Scalar mu(f, static_cast<long>(m)), eta(f, static_cast<long>(e));
            if (transform(left.h(), eta, mu) == right.h()) {
                v.isomorphic = true;
                v.eta = eta;
                v.mu = mu;
                v.reason = IsoReason::ok;
                return v;
            }
        }
    v.reason = support(left.h()) == support(right.h()) ? IsoReason::no_root : IsoReason::support_mismatch;
    return v;
}

std::vector<RingSpec> reduced_specs(const FieldSpec& field, unsigned n) {
    if (field.is_rational()) throw Error(ErrorCode::InvalidField, "corpus needs a finite field");
    const std::uint32_t p = field.characteristic();
    std::vector<RingSpec> out;
    std::vector<std::uint32_t> digits(n, 0);
    digits[0] = 1;
    while (true) {
        Poly h(field);
        for (unsigned i = 0; i < n; ++i) h.add_term(Monomial::of(Var::x, i), Scalar(field, static_cast<long>(digits[i])));
        out.push_back(RingSpec::standard(field, n, h));
        unsigned k = 0;
        while (k < n) {
            if (++digits[k] < p) break;
            digits[k] = k == 0 ? 1 : 0;
            ++k;
        }
        if (k == n) break;
    }
    return out;
}

}  // namespace dsurf
